#pragma once

#include "qres/quotient.hpp"
#include "qres/rational.hpp"
#include "qres/wpoly.hpp"

namespace qres {

/// Coefficient of the exceptional divisor in the pull-back of a divisor of
/// weighted multiplicity nu under a blow-up with invariant e.
Rat pullback_coeff(const Int& nu, const Int& e);

/// Self-intersection of the exceptional divisor of the (p,q)-blow-up at a
/// point of type (d;a,b): -e^2 / (d p q).
Rat exc_self_int(const Int& d, const Int& p, const Int& q, const Int& e);

/// Intersection of the exceptional divisor with the strict transform:
/// e nu / (d p q).
Rat exc_dot_strict(const Int& nu, const Int& d, const Int& p, const Int& q, const Int& e);

/// Bezout on the quotient weighted projective plane P^2_(p,q,r)(d;...):
/// D1 . D2 = e deg1 deg2 / (d p q r).
Rat bezout_wp2(const Int& deg1, const Int& deg2, const Int& d, const Int& p, const Int& q,
               const Int& r, const Int& e);

/// The invariant e = gcd(d, m1, m2, m3) of a one-row type (d;a,b,c) acting
/// on P^2_(p,q,r), where m_i are the 2x2 minors of [[p,q,r],[a,b,c]].
Int bezout_e(const Int& d, const Int& a, const Int& b, const Int& c, const Int& p, const Int& q,
             const Int& r);

/// Order of the effective group acting on P^2_(p,q,r) for a (possibly
/// multi-row) three-column type: group order divided by the kernel of the
/// projectivized action. Two divisors on the quotient plane intersect in
/// deg1*deg2 / (p q r * effective_order).
Int wp2_effective_order(const QuotientType& t, long p, long q, long r);

/// Intersection multiplicity of two plane curve germs at the origin of C^2
/// (Fulton's recursive algorithm, exact over Q). Throws when the germs
/// share a component through the origin.
Int smooth_local_intersection(const WPoly& f, const WPoly& g);

/// Local intersection number of two Q-divisor germs at the origin of a
/// two-column quotient: (1/|G|) times the covering intersection number.
Rat local_int(const QuotientType& t, const WPoly& f, const WPoly& g);

} // namespace qres
