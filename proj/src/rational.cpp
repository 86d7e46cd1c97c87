#include "gammaforge/rational.hpp"

#include <ostream>
#include <vector>
#include <numeric>

namespace gf {

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

Rational Rational::parse(const std::string& text)
{
    if (text.empty()) raise(ErrorCode::ParseError, "empty rational literal");
    size_t slash = text.find('/');
    auto parse_int = [](const std::string& s) -> int128 {
        if (s.empty()) raise(ErrorCode::ParseError, "empty integer literal");
        size_t i = 0;
        bool neg = false;
        if (s[0] == '+' || s[0] == '-') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) raise(ErrorCode::ParseError, "sign without digits");
        int128 v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                raise(ErrorCode::ParseError, "bad digit in rational: " + s);
            int128 nv;
            if (__builtin_mul_overflow(v, int128(10), &nv) ||
                __builtin_add_overflow(nv, int128(s[i] - '0'), &nv))
                raise(ErrorCode::ArithmeticOverflow, "rational literal too large");
            v = nv;
        }
        return neg ? -v : v;
    };
    if (slash == std::string::npos) return from_int128(parse_int(text), 1);
    return from_int128(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

long long gcd_abs(const std::vector<long long>& values)
{
    long long g = 0;
    for (long long v : values) g = std::gcd(g, v < 0 ? -v : v);
    return g;
}

long long lcm_abs(const std::vector<long long>& values)
{
    long long l = 1;
    for (long long v : values) {
        if (v == 0) raise(ErrorCode::ArithmeticOverflow, "lcm of zero");
        long long a = v < 0 ? -v : v;
        l = l / std::gcd(l, a) * a;
    }
    return l;
}

} // namespace gf
