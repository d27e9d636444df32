#ifndef DUVAL_RATIONAL_HPP
#define DUVAL_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "duval/errors.hpp"

namespace duval {

// Arbitrary-precision rationals; everything in this project is exact.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Accepts "p" or "p/q" with optional leading '-'.
inline Rat rat_from_string(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den == 0) throw DivisionByZeroError();
        return Rat(num, den);
    } catch (const std::exception& e) {
        throw Error("invalid rational literal '" + s + "': " + e.what());
    }
}

}  // namespace duval

#endif
