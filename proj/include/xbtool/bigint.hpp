#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace xbtool {

// All invariant arithmetic is exact: arbitrary-precision integers and
// rationals, no floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_pow(const Int& base, unsigned long long exp) {
    Int result = 1;
    Int b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

inline Rat rat_pow(const Rat& base, long long exp) {
    if (exp >= 0) {
        Rat result = 1;
        Rat b = base;
        unsigned long long e = static_cast<unsigned long long>(exp);
        while (e > 0) {
            if (e & 1) result *= b;
            b *= b;
            e >>= 1;
        }
        return result;
    }
    if (base == 0) throw std::domain_error("rat_pow: negative power of zero");
    return 1 / rat_pow(base, -exp);
}

// Canonical "num/den" rendering, denominator always positive.
inline std::string format_rat(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "a" or "a/b" with optional leading minus signs.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("parse_rat: malformed rational '" + s + "'");
    }
}

}  // namespace xbtool
