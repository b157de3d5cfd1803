#pragma once

#include "qres/rational.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace qres {

/// Exponent vector for a monomial in up to three variables (x, y, z).
using Expo = std::array<long, 3>;

/// Sparse polynomial in x, y, z with exact rational coefficients.
/// Exponents are nonnegative; zero coefficients are never stored.
class WPoly {
public:
    WPoly() = default;
    explicit WPoly(const Rat& c);

    static WPoly monomial(const Rat& c, long ex, long ey = 0, long ez = 0);
    static WPoly variable(int index, long power = 1);

    /// Parses terms of the form `c*x^a*y^b*z^c` joined by `+`/`-`;
    /// coefficients are integers or rationals `p/q`.
    static WPoly parse(const std::string& text);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    /// Number of variables actually used: 2 if z never appears, etc.
    int var_count() const;

    long degree() const;            // total degree, -1 for the zero polynomial
    long order() const;             // minimal total degree, -1 for zero
    long max_exponent(int var) const;
    long min_exponent(int var) const;

    Rat coefficient(const Expo& e) const;
    Rat constant_term() const { return coefficient({0, 0, 0}); }

    WPoly operator-() const;
    WPoly operator+(const WPoly& o) const;
    WPoly operator-(const WPoly& o) const;
    WPoly operator*(const WPoly& o) const;
    WPoly& operator+=(const WPoly& o);
    WPoly& operator-=(const WPoly& o);
    WPoly& operator*=(const WPoly& o);
    bool operator==(const WPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const WPoly& o) const { return terms_ != o.terms_; }

    WPoly scaled(const Rat& c) const;
    WPoly pow(long n) const;
    WPoly derivative(int var) const;

    /// Substitutes each variable by a monomial: var i maps to
    /// coeff[i] * x^M[i][0] * y^M[i][1] * z^M[i][2].
    WPoly monomial_substitute(const std::array<Expo, 3>& images) const;

    /// h(x + x0, y + y0, z + z0) with rational shift.
    WPoly translate(const Rat& x0, const Rat& y0, const Rat& z0 = 0) const;

    /// Divides every exponent of `var` by d. Throws std::domain_error when
    /// some exponent is not divisible (a violated well-definedness
    /// assumption upstream).
    WPoly root_substitute(int var, long d) const;

    WPoly divide_by_monomial(int var, long power) const;

    /// Substitutes a rational value for one variable.
    WPoly eval_var(int var, const Rat& value) const;
    Rat eval(const Rat& x, const Rat& y, const Rat& z = 0) const;

    /// Homogeneous part of the given total degree.
    WPoly homogeneous_part(long deg) const;

    /// Coefficients of the polynomial viewed as univariate in `var`
    /// (all other variables must be absent). Ascending degree.
    std::vector<Rat> univariate(int var) const;

    std::string str() const;

private:
    void add_term(const Expo& e, const Rat& c);
    std::map<Expo, Rat> terms_;
};

WPoly operator*(const Rat& c, const WPoly& p);

/// One (p,q)-homogeneous piece of a bivariate polynomial:
/// every monomial satisfies p*ex + q*ey = degree.
struct WHomogPiece {
    long p = 1, q = 1;
    Int degree = 0;
    WPoly part;
};

/// Minimal (p,q)-weighted order over the monomials of h. Throws on h = 0.
Int w_order(const WPoly& h, long p, long q);

/// Splits h into (p,q)-homogeneous pieces, ascending degree. Pieces sum to h.
std::vector<WHomogPiece> w_parts(const WPoly& h, long p, long q);

/// Weighted strict transform. Chart 1 substitutes (x,y) -> (x^p, x^q y) and
/// divides by x^nu; chart 2 substitutes (x,y) -> (x y^p, y^q) and divides
/// by y^nu. Returns (nu, quotient).
std::pair<Int, WPoly> strict_transform(const WPoly& h, long p, long q, int chart);

/// A factored (p,q)-homogeneous piece:
///   part = c * x^e0 * y^einf * prod_j factor_j^{mult_j},
/// each factor_j = phi_j(x^q, y^p) for a binary form phi_j irreducible
/// over the rationals of degree w_degree_j.
struct FactoredWHomog {
    Rat unit;               // leading rational constant
    long e0 = 0;            // exponent of x
    long einf = 0;          // exponent of y
    struct Factor {
        WPoly form;         // expanded factor in x, y
        long w_degree;      // degree of the underlying binary form
        long mult;
    };
    std::vector<Factor> factors;
};

FactoredWHomog factor_whomog(const WHomogPiece& piece);

// ---- univariate helpers over Q (dense, ascending degree) ----

using UPoly = std::vector<Rat>;

UPoly upoly_trim(UPoly p);
long upoly_deg(const UPoly& p);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
UPoly upoly_add(const UPoly& a, const UPoly& b);
/// Euclidean division a = q*b + r; returns {q, r}. b must be nonzero.
std::pair<UPoly, UPoly> upoly_divmod(const UPoly& a, const UPoly& b);
UPoly upoly_gcd(UPoly a, UPoly b);     // monic gcd
UPoly upoly_derivative(const UPoly& p);
Rat upoly_eval(const UPoly& p, const Rat& t);

/// Squarefree decomposition: returns list of (g_i, i) with p = c * prod g_i^i,
/// g_i squarefree and pairwise coprime (Yun's algorithm).
std::vector<std::pair<UPoly, long>> upoly_squarefree(const UPoly& p);

/// All rational roots with multiplicities.
std::vector<std::pair<Rat, long>> upoly_rational_roots(const UPoly& p);

/// Full factorization into irreducibles over Q (rational roots plus
/// Kronecker's method; intended for the small degrees arising here).
/// Returns primitive integer factors with positive leading coefficient.
std::vector<std::pair<UPoly, long>> upoly_factor(const UPoly& p);

/// Resultant of f and g with respect to `var` (Sylvester determinant,
/// computed by evaluation and interpolation). The result is univariate in
/// the other variable of a bivariate input.
WPoly resultant(const WPoly& f, const WPoly& g, int var);

} // namespace qres
