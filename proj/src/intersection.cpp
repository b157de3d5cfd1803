#include "qres/intersection.hpp"

#include <stdexcept>

namespace qres {

Rat pullback_coeff(const Int& nu, const Int& e) {
    if (e < 1) throw std::invalid_argument("pullback_coeff: e must be >= 1");
    return Rat(nu, e);
}

Rat exc_self_int(const Int& d, const Int& p, const Int& q, const Int& e) {
    if (d < 1 || p < 1 || q < 1 || e < 1) throw std::invalid_argument("exc_self_int: positive inputs required");
    return Rat(-e * e, d * p * q);
}

Rat exc_dot_strict(const Int& nu, const Int& d, const Int& p, const Int& q, const Int& e) {
    return Rat(e * nu, d * p * q);
}

Rat bezout_wp2(const Int& deg1, const Int& deg2, const Int& d, const Int& p, const Int& q,
               const Int& r, const Int& e) {
    if (d < 1 || p < 1 || q < 1 || r < 1) throw std::invalid_argument("bezout_wp2: positive inputs required");
    return Rat(e * deg1 * deg2, d * p * q * r);
}

Int bezout_e(const Int& d, const Int& a, const Int& b, const Int& c, const Int& p, const Int& q,
             const Int& r) {
    Int m1 = q * c - r * b;
    Int m2 = p * c - r * a;
    Int m3 = p * b - q * a;
    return gcd(gcd(d, m1), gcd(m2, m3));
}

Int wp2_effective_order(const QuotientType& t, long p, long q, long r) {
    if (t.ncols != 3) throw std::invalid_argument("wp2_effective_order: three-column type expected");
    if (t.is_trivial()) return 1;
    // g acts trivially on P^2_w iff its coordinate characters form a tuple
    // (l^p, l^q, l^r) for some root of unity l. Append l as an extra cyclic
    // factor with weights (p,q,r) and count pairs acting trivially.
    Int D = 1;
    for (auto& d : t.orders) D = lcm(D, d);
    Int M = D * p * q * r;
    QuotientType aug = t;
    aug.orders.push_back(M);
    aug.weights.push_back({Int(p), Int(q), Int(r)});
    Int pairs = count_trivial_on(aug, {0, 1, 2});
    Int lambda_only = count_trivial_on(QuotientType::cyclic(M, {Int(p), Int(q), Int(r)}), {0, 1, 2});
    Int kernel = pairs / lambda_only;
    return t.group_order() / kernel;
}

Int smooth_local_intersection(const WPoly& f0, const WPoly& g0) {
    if (f0.is_zero() || g0.is_zero())
        throw std::domain_error("local intersection with the zero divisor");
    if (f0.max_exponent(2) > 0 || g0.max_exponent(2) > 0)
        throw std::domain_error("local intersection expects bivariate germs");

    WPoly f = f0, g = g0;
    if (f.constant_term() != 0 || g.constant_term() != 0) return 0;

    Int total = 0;
    long bound = (f.degree() + 1) * (g.degree() + 1) + 4;
    long guard = 0;
    while (true) {
        if (++guard > 64 * bound)
            throw std::domain_error("local intersection: germs share a component through the origin");
        if (f.constant_term() != 0 || g.constant_term() != 0) return total;
        WPoly a = f.eval_var(1, 0);   // f(x, 0)
        WPoly b = g.eval_var(1, 0);
        long r = a.is_zero() ? -1 : a.min_exponent(0);
        long s = b.is_zero() ? -1 : b.min_exponent(0);
        if (r >= 0 && (s < 0 || r > s)) {
            std::swap(f, g);
            std::swap(a, b);
            std::swap(r, s);
        }
        if (r < 0) {
            // y divides f
            WPoly f1 = f.divide_by_monomial(1, 1);
            if (b.is_zero())
                throw std::domain_error("local intersection: germs share the component y = 0");
            total += Int(b.min_exponent(0));    // I(y, g) = ord_x g(x,0)
            f = f1;
            continue;
        }
        // r <= s, both finite: cancel the lowest term of g(x,0)
        Rat la = a.coefficient({r, 0, 0});
        Rat lb = b.coefficient({s, 0, 0});
        g -= (lb / la) * (WPoly::monomial(Rat(1), s - r, 0) * f);
    }
}

Rat local_int(const QuotientType& t, const WPoly& f, const WPoly& g) {
    if (t.ncols != 2) throw std::invalid_argument("local_int: two-column type expected");
    Int i = smooth_local_intersection(f, g);
    return Rat(i, t.group_order());
}

} // namespace qres
