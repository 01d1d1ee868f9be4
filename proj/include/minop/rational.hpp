#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace minop {

// All coefficient arithmetic in the library is exact.  Betti numbers and sign
// conventions are the acceptance currency, so floating point is banned
// throughout; boost's arbitrary-precision rationals keep intermediate
// eliminations exact at desk scale.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Renders "p/q" (or just "p" when q == 1), the wire format used for
// coefficients in every JSON surface of the library.
inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
}

}  // namespace minop
