#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace sharpchar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& q) {
    return denominator(q) == 1;
}

// "7", "-3/4"; denominators of 1 are omitted.
inline std::string format_rational(const Rational& q) {
    std::string s = numerator(q).str();
    if (!is_integral(q))
        s += "/" + denominator(q).str();
    return s;
}

} // namespace sharpchar
