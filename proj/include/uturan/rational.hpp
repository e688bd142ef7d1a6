#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include "uturan/errors.hpp"

namespace uturan {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with arbitrary-precision numerator/denominator. Density
/// values (1/27, 4/27, triad densities) are compared exactly, never as floats.
using Rational = boost::rational<BigInt>;

inline std::string to_string(const Rational& r) {
    std::string s = r.numerator().str();
    if (r.denominator() != 1) s += "/" + r.denominator().str();
    return s;
}

/// Parses "p" or "p/q".
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw Error("zero denominator in '" + text + "'");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw Error("bad rational '" + text + "': " + e.what());
    }
}

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

} // namespace uturan
