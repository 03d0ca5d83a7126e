#pragma once

// Exact arithmetic base types. Everything in this library is exact: big
// integers and rationals here, cyclotomic numbers on top of them. No
// floating point is used anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <sstream>
#include <string>

namespace hhalg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline long lcm_long(long a, long b) { return std::lcm(a, b); }
inline long gcd_long(long a, long b) { return std::gcd(a, b); }

// nonnegative exponent only
inline Rat rat_pow(Rat base, long e) {
    Rat r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// floor-style remainder, result always in [0, m)
inline long mod_norm(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace hhalg
