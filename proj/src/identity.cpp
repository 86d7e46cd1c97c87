#include "gammaforge/identity.hpp"

#include <cstdio>
#include <sstream>

namespace gf {

bool MonomialIdentity::character_invariant_holds(const std::vector<Rational>& m_over_d) const
{
    for (size_t i = 0; i < size(); ++i) {
        Character lhs = mul(mul(eta[i], lambda[i]), nu_power(field, m_over_d[i]));
        if (lhs != pow(gamma, exponents[i])) return false;
    }
    return true;
}

bool MonomialIdentity::character_invariant_holds() const
{
    return character_invariant_holds(std::vector<Rational>(size(), Rational(1)));
}

nlohmann::json character_to_json(const Character& c)
{
    nlohmann::json j;
    if (c.field.kind == FieldKind::NonArch)
        j["field"] = nlohmann::json{{"NonArch", c.field.q}};
    else
        j["field"] = field_json_tag(c.field);
    j["s"] = c.s.to_string();
    j["n"] = c.n;
    return j;
}

Character character_from_json(const nlohmann::json& j, const LocalField* expected)
{
    LocalField f;
    const auto& jf = j.at("field");
    if (jf.is_string()) {
        std::string tag = jf.get<std::string>();
        if (tag == "R")
            f = LocalField::real();
        else if (tag == "C")
            f = LocalField::complex_field();
        else
            raise(ErrorCode::ParseError, "unknown field tag " + tag);
    } else {
        f = LocalField::nonarch(jf.at("NonArch").get<long long>());
    }
    if (expected && f != *expected) raise(ErrorCode::FieldMismatch, "character field mismatch");
    return Character(f, Rational::parse(j.at("s").get<std::string>()), j.at("n").get<long long>());
}

std::string format_double_15(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

nlohmann::json complex_to_json(const cdouble& z)
{
    return nlohmann::json::array({format_double_15(z.real()), format_double_15(z.imag())});
}

nlohmann::json identity_to_json(const MonomialIdentity& id)
{
    nlohmann::json j;
    if (id.field.kind == FieldKind::NonArch)
        j["field"] = nlohmann::json{{"NonArch", id.field.q}};
    else
        j["field"] = field_json_tag(id.field);
    j["exponents"] = id.exponents;
    j["degrees"] = id.degrees;
    j["lambda"] = nlohmann::json::array();
    for (const auto& c : id.lambda) j["lambda"].push_back(character_to_json(c));
    j["eta"] = nlohmann::json::array();
    for (const auto& c : id.eta) j["eta"].push_back(character_to_json(c));
    j["gamma"] = character_to_json(id.gamma);
    j["case"] = id.case_ == IdentityCase::SumTwo ? "Sum2" : "Sum0";
    j["ab"] = id.ab().to_string();
    j["C"] = id.C ? complex_to_json(*id.C) : nlohmann::json(nullptr);
    j["sense"] = id.sense == Sense::Weak ? "weak" : "strong";
    return j;
}

MonomialIdentity identity_from_json(const nlohmann::json& j)
{
    MonomialIdentity id;
    const auto& jf = j.at("field");
    if (jf.is_string()) {
        std::string tag = jf.get<std::string>();
        id.field = tag == "R" ? LocalField::real() : LocalField::complex_field();
        if (tag != "R" && tag != "C") raise(ErrorCode::ParseError, "unknown field tag " + tag);
    } else {
        id.field = LocalField::nonarch(jf.at("NonArch").get<long long>());
    }
    id.exponents = j.at("exponents").get<std::vector<long long>>();
    if (j.contains("degrees"))
        id.degrees = j.at("degrees").get<std::vector<long long>>();
    else
        id.degrees.assign(id.exponents.size(), 1);
    for (const auto& c : j.at("lambda")) id.lambda.push_back(character_from_json(c, &id.field));
    for (const auto& c : j.at("eta")) id.eta.push_back(character_from_json(c, &id.field));
    id.gamma = character_from_json(j.at("gamma"), &id.field);
    id.case_ = j.at("case").get<std::string>() == "Sum2" ? IdentityCase::SumTwo : IdentityCase::SumZero;
    Rational ab = Rational::parse(j.at("ab").get<std::string>());
    id.a = Rational(1);
    id.b = ab; // synthesizers normalize a = 1
    if (j.contains("a")) id.a = Rational::parse(j.at("a").get<std::string>());
    if (j.contains("b")) id.b = Rational::parse(j.at("b").get<std::string>());
    if (j.contains("C") && !j.at("C").is_null()) {
        const auto& jc = j.at("C");
        auto comp = [](const nlohmann::json& v) {
            return v.is_string() ? std::stod(v.get<std::string>()) : v.get<double>();
        };
        id.C = cdouble(comp(jc.at(0)), comp(jc.at(1)));
    }
    id.sense = j.at("sense").get<std::string>() == "strong" ? Sense::Strong : Sense::Weak;
    return id;
}

namespace {

std::string char_latex(const Character& c)
{
    std::ostringstream os;
    os << "\\lambda_{" << c.s.to_string() << "," << c.n << "}";
    return os.str();
}

std::string join_ll(const std::vector<long long>& v, bool negate = false)
{
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << (negate ? -v[i] : v[i]);
    }
    return os.str();
}

} // namespace

std::string identity_to_latex(const MonomialIdentity& id)
{
    std::ostringstream os;
    os << "\\widehat{G^{" << join_ll(id.exponents) << ",\\,a=" << id.a.to_string() << "}_{";
    for (size_t i = 0; i < id.lambda.size(); ++i) {
        if (i) os << ",";
        os << char_latex(id.lambda[i]);
    }
    os << "}} = C\\, G^{" << join_ll(id.exponents, id.case_ == IdentityCase::SumZero)
       << ",\\,b=" << id.b.to_string() << "}_{";
    for (size_t i = 0; i < id.eta.size(); ++i) {
        if (i) os << ",";
        os << char_latex(id.eta[i]);
    }
    os << "}";
    if (id.C) {
        os << ", \\quad C \\approx " << format_double_15(id.C->real());
        if (id.C->imag() >= 0) os << "+";
        os << format_double_15(id.C->imag()) << "i";
    }
    return os.str();
}

} // namespace gf
