#pragma once

#include "qres/charproduct.hpp"
#include "qres/curve.hpp"
#include "qres/wpoly.hpp"

namespace qres {

/// Milnor number as the dimension of C{x,y}/(h_x, h_y), computed by exact
/// row reduction on monomials below a truncation degree that is raised
/// until the dimension stabilizes. Throws when the singularity is not
/// isolated (the dimension never stabilizes).
Int milnor_jacobian(const WPoly& h);

/// Truncated dimension at a fixed degree bound; exposed for the
/// stabilization test.
Int milnor_jacobian_truncated(const WPoly& h, long bound);

/// Characteristic polynomial from the classical embedded resolution by
/// iterated (1,1)-blow-ups at rational centers.
CharProduct classical_charpoly(const WPoly& h);

/// (p-1)(q-1), the Milnor number of x^p + y^q for coprime p,q >= 2.
Int quasihomog_mu(long p, long q);

/// Characteristic polynomial of x^p + y^q for coprime p,q:
/// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)).
CharProduct torus_knot_delta(long p, long q);

} // namespace qres
