#pragma once

#include <cstdint>
#include <string>
#include <iosfwd>
#include <functional>
#include <vector>

#include "gammaforge/errors.hpp"

namespace gf {

using int128 = __int128;

/// Exact rational number over checked 128-bit integers.
///
/// Aways stored reduced with positive denominator.  Every operation that
/// could overflow the 128-bit range throws ArithmeticOverflow instead of
/// wrapping; the divisor/covering/polynomial paths stay far below that.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) { assign(int128(n), int128(d)); }

    static Rational from_int128(int128 n, int128 d)
    {
        Rational r;
        r.assign(n, d);
        return r;
    }

    int128 num() const { return num_; }
    int128 den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }

    long long num_ll() const { return checked_ll(num_); }
    long long den_ll() const { return checked_ll(den_); }

    /// Largest integer <= value.
    long long floor_ll() const
    {
        int128 q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return checked_ll(q);
    }

    double to_double() const { return double(num_) / double(den_); }

    Rational operator-() const { return from_int128(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b)
    {
        return from_int128(add_chk(mul_chk(a.num_, b.den_), mul_chk(b.num_, a.den_)),
                           mul_chk(a.den_, b.den_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b)
    {
        return from_int128(mul_chk(a.num_, b.num_), mul_chk(a.den_, b.den_));
    }
    friend Rational operator/(const Rational& a, const Rational& b)
    {
        if (b.num_ == 0) raise(ErrorCode::ArithmeticOverflow, "division by zero rational");
        return from_int128(mul_chk(a.num_, b.den_), mul_chk(a.den_, b.num_));
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    /// Integer power, negative exponents allowed for nonzero values.
    Rational pow(long long k) const
    {
        if (k == 0) return Rational(1);
        Rational base = *this;
        if (k < 0) {
            if (num_ == 0) raise(ErrorCode::ArithmeticOverflow, "0^negative");
            base = Rational(1) / base;
            k = -k;
        }
        Rational acc(1);
        while (k > 0) {
            if (k & 1) acc *= base;
            base = (k > 1) ? base * base : base;
            k >>= 1;
        }
        return acc;
    }

    friend bool operator==(const Rational& a, const Rational& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b)
    {
        return mul_chk(a.num_, b.den_) < mul_chk(b.num_, a.den_);
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    /// Reduced "p/q" (or plain "p" for integers), positive denominator.
    std::string to_string() const
    {
        std::string s = int128_to_string(num_);
        if (den_ != 1) s += "/" + int128_to_string(den_);
        return s;
    }

    /// Parses "p", "-p/q" etc.  Throws ParseError on malformed input.
    static Rational parse(const std::string& text);

private:
    int128 num_, den_;

    static long long checked_ll(int128 v)
    {
        if (v > int128(INT64_MAX) || v < int128(INT64_MIN))
            raise(ErrorCode::ArithmeticOverflow, "value exceeds 64-bit range");
        return (long long)v;
    }

    static int128 add_chk(int128 a, int128 b)
    {
        int128 r;
        if (__builtin_add_overflow(a, b, &r))
            raise(ErrorCode::ArithmeticOverflow, "rational addition overflow");
        return r;
    }

    static int128 mul_chk(int128 a, int128 b)
    {
        int128 r;
        if (__builtin_mul_overflow(a, b, &r))
            raise(ErrorCode::ArithmeticOverflow, "rational multiplication overflow");
        return r;
    }

    static int128 gcd128(int128 a, int128 b)
    {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void assign(int128 n, int128 d)
    {
        if (d == 0) raise(ErrorCode::ArithmeticOverflow, "zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        int128 g = gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        num_ = n;
        den_ = d;
    }

    static std::string int128_to_string(int128 v)
    {
        if (v == 0) return "0";
        bool neg = v < 0;
        unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
        std::string digits;
        while (u > 0) {
            digits += char('0' + int(u % 10));
            u /= 10;
        }
        if (neg) digits += '-';
        return std::string(digits.rbegin(), digits.rend());
    }
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// lcm of |values|, zero entries rejected.
long long lcm_abs(const std::vector<long long>& values);
long long gcd_abs(const std::vector<long long>& values);

} // namespace gf

template <>
struct std::hash<gf::Rational> {
    size_t operator()(const gf::Rational& r) const noexcept
    {
        auto h = std::hash<long long>{};
        return h((long long)r.num()) * 1000003u ^ h((long long)r.den());
    }
};
