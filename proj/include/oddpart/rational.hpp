#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "oddpart/errors.hpp"

namespace oddpart {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }
inline double to_double(double x) { return x; }

/// "p/q" (or plain "p") with q normalized positive.
inline std::string rational_to_string(const Rational& r) {
    const Integer num = boost::multiprecision::numerator(r);
    const Integer den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Accepts "p/q", "p", and plain decimal strings like "2.5" (parsed exactly).
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ArgumentOutOfDomain("empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            Integer num(text.substr(0, slash));
            Integer den(text.substr(slash + 1));
            if (den == 0) throw ArgumentOutOfDomain("zero denominator in '" + text + "'");
            return Rational(num, den);
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(Integer(text));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        Integer den = 1;
        for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
        bool neg = !digits.empty() && digits[0] == '-';
        if (neg) digits = digits.substr(1);
        if (digits.empty()) throw ArgumentOutOfDomain("bad rational literal '" + text + "'");
        Rational r{Integer(digits), den};
        return neg ? -r : r;
    } catch (const std::runtime_error& e) {
        throw ArgumentOutOfDomain("bad rational literal '" + text + "': " + e.what());
    }
}

/// ceil(sqrt(j)) for j >= 1, exact.
inline std::uint64_t ceil_isqrt(std::uint64_t j) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(j)));
    while (r * r >= j && r > 0) --r;   // now r*r < j
    while (r * r < j) ++r;
    return r;
}

}  // namespace oddpart
