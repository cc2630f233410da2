#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leibniz {

/// Exact rational number. GMP keeps every value canonical (lowest terms,
/// positive denominator) after each arithmetic operation.
using Rational = mpq_class;

using Vector = std::vector<Rational>;

/// Raised for malformed textual rationals such as "1/0" or "1.5".
class RationalParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p", "p/q" with decimal integers. Whitespace is not allowed.
inline Rational parse_rational(std::string_view text)
{
    auto digits_ok = [](std::string_view s, bool allow_sign) {
        if (s.empty())
            return false;
        std::size_t i = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+'))
            i = 1;
        if (i == s.size())
            return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                return false;
        return true;
    };

    const auto slash = text.find('/');
    std::string num{text.substr(0, slash)};
    std::string den = slash == std::string_view::npos ? std::string{"1"}
                                                      : std::string{text.substr(slash + 1)};
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw RationalParseError("malformed rational \"" + std::string{text} + "\"");
    if (num[0] == '+')
        num.erase(0, 1);

    mpz_class n(num, 10);
    mpz_class d(den, 10);
    if (d == 0)
        throw RationalParseError("zero denominator in \"" + std::string{text} + "\"");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (sgn(x) != 0)
            return false;
    return true;
}

} // namespace leibniz
