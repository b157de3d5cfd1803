#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <tuple>

namespace qres {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

/// Extended Euclid: returns (g, u, v) with g = gcd(a,b) > 0 and g = u*a + v*b.
/// Throws if both arguments are zero.
inline std::tuple<Int, Int, Int> ext_gcd(const Int& a, const Int& b) {
    if (a == 0 && b == 0) throw std::invalid_argument("ext_gcd(0,0) is undefined");
    Int old_r = a, r = b;
    Int old_u = 1, u = 0;
    Int old_v = 0, v = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_u - q * u; old_u = u; u = t;
        t = old_v - q * v; old_v = v; v = t;
    }
    if (old_r < 0) { old_r = -old_r; old_u = -old_u; old_v = -old_v; }
    return {old_r, old_u, old_v};
}

/// Inverse of a modulo d (d >= 1). Requires gcd(a,d) = 1; the result lies in [0,d).
inline Int mod_inverse(const Int& a, const Int& d) {
    if (d == 1) return 0;
    auto [g, u, v] = ext_gcd(a, d);
    if (g != 1) throw std::domain_error("mod_inverse: arguments not coprime");
    Int r = u % d;
    if (r < 0) r += d;
    return r;
}

/// Representative of a modulo d in [0,d).
inline Int mod_reduce(const Int& a, const Int& d) {
    if (d <= 0) throw std::invalid_argument("mod_reduce: modulus must be positive");
    Int r = a % d;
    if (r < 0) r += d;
    return r;
}

inline long to_long(const Int& a) {
    return static_cast<long>(a);
}

inline std::string to_string(const Int& a) { return a.str(); }

inline std::string to_string(const Rat& a) {
    if (denominator(a) == 1) return numerator(a).str();
    return numerator(a).str() + "/" + denominator(a).str();
}

} // namespace qres
