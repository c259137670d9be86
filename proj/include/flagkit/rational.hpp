#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace flagkit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline int sign_of(const Rational& q) {
    if (q > 0) return 1;
    if (q < 0) return -1;
    return 0;
}

/// Renders "p" or "p/q" with q > 1; exact, locale-free.
inline std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (!is_integer(q)) s += "/" + denominator(q).str();
    return s;
}

/// Parses "p" or "p/q" (optional leading '-'). Throws std::invalid_argument on junk.
Rational parse_rational(const std::string& text);

/// Smallest integer strictly greater than q.
inline Integer strict_ceil(const Rational& q) {
    Integer n = numerator(q), d = denominator(q);
    Integer fl;  // floor division, then one past
    if (n >= 0) {
        fl = n / d;
    } else {
        Integer m = -n + d - 1;
        fl = -(m / d);
    }
    return fl + 1;
}

}  // namespace flagkit
