#pragma once

#include <stdexcept>
#include <string>

namespace gf {

enum class ErrorCode {
    FieldMismatch,
    EvenRootOverReal,
    UnsupportedField,
    SingularInput,
    ZeroArgument,
    PoleError,
    UnsupportedCase,
    NotConstant,
    BadTower,
    WindowTooSmall,
    TypeMismatch,
    EvenModulusOverReal,
    UnknownName,
    DegenerateHessian,
    DegreeMismatch,
    SingularHessian,
    AssumptionViolated,
    NonMonomialFactor,
    ToleranceNotMet,
    LevelTooCoarse,
    PrecisionTooLow,
    ArithmeticOverflow,
    ParseError,
};

inline const char* error_code_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::EvenRootOverReal: return "EvenRootOverReal";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::SingularInput: return "SingularInput";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::PoleError: return "PoleError";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::NotConstant: return "NotConstant";
    case ErrorCode::BadTower: return "BadTower";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::EvenModulusOverReal: return "EvenModulusOverReal";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::DegenerateHessian: return "DegenerateHessian";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::SingularHessian: return "SingularHessian";
    case ErrorCode::AssumptionViolated: return "AssumptionViolated";
    case ErrorCode::NonMonomialFactor: return "NonMonomialFactor";
    case ErrorCode::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorCode::LevelTooCoarse: return "LevelTooCoarse";
    case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Library-wide exception type carrying a machine-checkable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what)
{
    throw Error(code, what);
}

} // namespace gf
