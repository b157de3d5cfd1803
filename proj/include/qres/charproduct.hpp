#pragma once

#include "qres/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace qres {

/// Formal product prod_i (t^{m_i} - 1)^{a_i} with integer exponents of
/// either sign; the carrier for characteristic polynomials before
/// expansion. Canonical: no zero exponents stored.
class CharProduct {
public:
    CharProduct() = default;

    static CharProduct one() { return CharProduct(); }
    static CharProduct factor(const Int& m, const Int& a);

    const std::map<Int, Int>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    void multiply_factor(const Int& m, const Int& a);
    CharProduct operator*(const CharProduct& o) const;
    CharProduct inverse() const;

    /// t -> t^s on every factor.
    CharProduct substitute_power(const Int& s) const;

    /// (t^m - 1)^a -> (t^{m/gcd(m,k)} - 1)^{gcd(m,k) a}, merging collisions.
    CharProduct delta_k(const Int& k) const;

    /// Degree as a rational function: sum of m_i * a_i.
    Int degree() const;

    bool operator==(const CharProduct& o) const { return factors_ == o.factors_; }

    std::string str() const;

private:
    std::map<Int, Int> factors_;
};

/// Delta = prod_d Phi_d^{c_d} written on the basis of cyclotomic
/// polynomials; the canonical equality witness for CharProducts.
struct CyclotomicVector {
    std::map<Int, Int> c;

    bool is_polynomial() const;
    Int degree() const;     // sum c_d * phi(d); degree of the rational function
    bool operator==(const CyclotomicVector& o) const { return c == o.c; }
    std::string str() const;
};

CyclotomicVector to_cyclotomic(const CharProduct& cp);

/// Dense integer polynomial, ascending degree.
using PolyZ = std::vector<Int>;

PolyZ polyz_mul(const PolyZ& a, const PolyZ& b);
/// Exact division; throws when the division leaves a remainder.
PolyZ polyz_div(const PolyZ& a, const PolyZ& b);
/// The d-th cyclotomic polynomial.
PolyZ cyclotomic_poly(long d);
Int euler_phi(long d);

/// Expands the product into an integer polynomial. Throws std::domain_error
/// when the product is not a polynomial (negative cyclotomic exponent).
PolyZ expand(const CharProduct& cp);

/// A'Campo assembly from strata data (multiplicity, Euler characteristic):
///   Delta(t) = [ 1/(t-1) * prod (t^m - 1)^chi ]^{(-1)^n}.
CharProduct acampo(const std::vector<std::pair<Int, Int>>& strata, int n);

/// Milnor number of an assembled characteristic polynomial: its degree.
Int milnor_number(const CharProduct& cp);

/// Closed formula for superisolated surface germs:
///   (t^m - 1)^{chi_comp} / (t - 1) * prod_P Delta_P(t^{m+1}).
CharProduct closed_sis(const Int& chi_comp, long m, const std::vector<CharProduct>& local_deltas);

/// Closed formula for Yomdin-Le surface germs:
///   (t^m - 1)^{chi_comp} / (t - 1) * prod_P Delta_P^k(t^{m+k}).
CharProduct closed_yls(const Int& chi_comp, long m, long k,
                       const std::vector<CharProduct>& local_deltas);

} // namespace qres
