#pragma once

#include "qres/rational.hpp"
#include "qres/wpoly.hpp"

#include <optional>
#include <vector>

namespace qres {

/// Abelian quotient space X(d;A): the orbit space of C^n under the diagonal
/// action of mu_{d_0} x ... x mu_{d_r} with weight matrix A (one row per
/// cyclic factor, one column per coordinate).
struct QuotientType {
    int ncols = 2;                            // ambient dimension (2 or 3)
    std::vector<Int> orders;                  // d_i >= 1
    std::vector<std::vector<Int>> weights;    // aligned with orders

    static QuotientType trivial(int ncols) { return QuotientType{ncols, {}, {}}; }
    static QuotientType cyclic(Int d, std::vector<Int> row);

    int rows() const { return (int)orders.size(); }
    bool is_trivial() const { return orders.empty(); }
    Int group_order() const;

    bool operator==(const QuotientType& o) const;
    std::string str() const;
};

/// Reduces weights into [0, d_i), divides out row contents, and removes
/// factors acting trivially. The orbit space is unchanged (the lattice of
/// invariant monomials is preserved).
QuotientType simplify_type(const QuotientType& t);

/// True iff the monomial with the given exponents is invariant, i.e.
/// A.e = 0 componentwise mod d.
bool is_invariant_monomial(const QuotientType& t, const Expo& e);

/// True iff every monomial of the polynomial is invariant, so that the
/// polynomial descends to a function on the quotient.
bool is_function(const QuotientType& t, const WPoly& poly);

/// Monomial map between charts: coordinate j of the target is the monomial
/// prod_i source_i^{exponents[j][i]} in the source coordinates. Pull-back of
/// target-invariant monomials lands in source-invariant monomials.
struct MonomialMap {
    QuotientType source;
    QuotientType target;
    std::array<Expo, 3> exponents{Expo{1, 0, 0}, Expo{0, 1, 0}, Expo{0, 0, 1}};

    WPoly pullback(const WPoly& on_target) const;
};

/// Normalization of a one-row two-column type with gcd(d,a,b) = 1: returns
/// an isomorphic presentation that acts freely on the torus with no
/// pseudo-reflections, together with the monomial map realizing the
/// isomorphism of orbit spaces.
std::pair<QuotientType, MonomialMap> normalize_2d(const QuotientType& t);

/// Number of group elements acting trivially on every coordinate in `coords`.
Int count_trivial_on(const QuotientType& t, const std::vector<int>& coords);

/// Effective order of the stabilizer of a generic point of the stratum
/// {x_i = 0 : i in zero_coords}, acting on the transversal slice.
Int stabilizer_order(const QuotientType& t, const std::vector<int>& zero_coords);

/// L = lcm_i( d_i / gcd(d_i, a_{i,coord}) ): the order of the image of the
/// character acting on the given coordinate. Divisor multiplicities divide
/// by this to give stratum multiplicities.
Int multiplicity_L(const QuotientType& t, int coord);

/// Order of the image of the `coord`-character restricted to the subgroup
/// acting trivially on all coordinates in `free_coords`. This is the L of
/// the local presentation at a generic point of the stratum where exactly
/// the `free_coords` are nonzero.
Int stratum_character_order(const QuotientType& t, int coord, const std::vector<int>& free_coords);

/// Presentation of the subgroup acting trivially on the given coordinates
/// as a product of cyclic factors on the same ambient coordinates (the
/// local group at a generic point of the corresponding stratum).
QuotientType present_subgroup(const QuotientType& t, const std::vector<int>& trivial_coords);

/// One chart of a weighted blow-up. The gluing substitution is written in
/// the covering coordinates; for 2D charts the actual chart coordinate on
/// the exceptional direction is the root_index-th power of the covering one.
struct BlowupChart {
    QuotientType type;
    std::array<Expo, 3> substitution;   // images of base coordinates
    int exceptional_coord = 0;
    Int root_index = 1;                 // 2D only; 1 in dimension 3
};

struct Blowup2D {
    BlowupChart chart1, chart2;
    Int e;                              // gcd(d, p*b - q*a)
};

/// Weighted (p,q)-blow-up at the origin of a normalized one-row type.
/// Chart types follow the standard presentation
///   X(pd/e; 1, (-q + beta p b)/e)  and  X(qd/e; (-p + mu q a)/e, 1),
/// with the exceptional divisor given by x = 0 resp. y = 0.
Blowup2D blowup_2d(const QuotientType& t, long p, long q);

struct Blowup3D {
    std::array<BlowupChart, 3> charts;
};

/// Weighted (p,q,r)-blow-up at the origin of a (possibly multi-row,
/// possibly non-normalized) three-column type. No normalization is applied
/// to the resulting chart types.
Blowup3D blowup_3d(const QuotientType& t, long p, long q, long r);

/// Moves a rational point of a chart to the origin: h(x + x0, y + y0).
/// Throws a ScopeError unless the translation commutes with the group
/// action (the group must act trivially on every shifted coordinate).
WPoly translate_point(const QuotientType& t, const WPoly& h, const Rat& x0, const Rat& y0);

/// Invariant-monomial lattice of a two-column type, enumerated up to the
/// given degree bound in each variable; used as an oracle for
/// simplify_type and normalize_2d.
std::vector<std::pair<long, long>> invariant_monomials_2d(const QuotientType& t, long bound);

} // namespace qres
