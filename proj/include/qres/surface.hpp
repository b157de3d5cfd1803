#pragma once

#include "qres/charproduct.hpp"
#include "qres/curve.hpp"
#include "qres/quotient.hpp"

#include <string>
#include <vector>

namespace qres {

/// One singular point of the tangent cone with its local data.
struct SurfacePoint {
    std::string label;            // e.g. "[0:0:1]"
    WPoly germ;                   // local equation of the cone at the point
    CurveResolution resolution;
    Int mu;                       // local Milnor number of the cone
};

/// Input for the lift: f = f_m + f_{m+k} + ... with the non-degeneracy
/// condition on f_{m+k} along the singular points of the cone.
struct SurfaceInput {
    long m = 2;
    long k = 1;                   // 1 reproduces the superisolated case
    std::vector<SurfacePoint> points;

    Int total_mu() const;
};

enum class StratumKind3 {
    E0,        // strict-transform complement on the first divisor
    Interior,  // E_a minus its coordinate lines
    LineX,     // line through [1:0:0] matching the 2D point [1:0]
    LineY,     // line through [0:1:0] matching the 2D point [0:1]
    CornerXY,  // the point [0:0:1]
    LineZ,     // on two divisors; carried but never contributes
    CornerXZ,
    CornerYZ
};

const char* stratum_kind_name(StratumKind3 k);

struct Stratum3D {
    int point;          // index into SurfaceInput::points, -1 for E0
    int divisor;        // 2D divisor id, -1 for E0
    StratumKind3 kind;
    Int chi = 0;
    Int mult = 0;       // set when chi != 0
    bool carries_monodromy = false;
};

struct DivisorInfo3D {
    int point;
    int divisor;                  // matching 2D divisor id
    long depth;                   // 1 for the first divisor over its point
    Int wx, wy, wz;               // 3D blow-up weights
    Int mult;                     // multiplicity in the total transform
    std::vector<Stratum3D> strata;
};

struct SurfaceResolution {
    long m = 2;
    long k = 1;
    Int chi_complement = 0;       // chi(P^2 \ C)
    Int e0_mult = 0;
    std::vector<DivisorInfo3D> divisors;

    std::vector<Stratum3D> all_strata() const;          // E0 first
    std::vector<std::pair<Int, Int>> acampo_strata() const;
};

/// chi(P^2 \ C) = m^2 - 3m + 3 - sum of the Milnor numbers.
Int chi_p2_complement(long m, const Int& total_mu);

/// Combinatorial lift of the curve resolutions to an embedded resolution of
/// the superisolated surface germ (k = 1).
SurfaceResolution lift_sis(const SurfaceInput& input);

/// General Yomdin-Le lift, k >= 1; for k = 1 it agrees with lift_sis
/// field by field.
SurfaceResolution lift_yls(const SurfaceInput& input);

/// Strata of the lifted divisors over one resolved curve germ.
std::vector<Stratum3D> strata_sis(const CurveResolution& res, long m, int point_index);
std::vector<Stratum3D> strata_yls(const CurveResolution& res, long m, long k, int point_index);

CharProduct surface_charpoly(const SurfaceResolution& sr);
Int surface_milnor(const SurfaceResolution& sr);

/// Closed-formula counterpart assembled from the local curve data.
CharProduct surface_charpoly_closed(const SurfaceInput& input);

struct VerifyReport {
    std::vector<std::string> checks;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
    std::string summary() const;
};

/// Chart-level recomputation of the lift: replays every blow-up in
/// dimension three on explicit (generally non-normalized) quotient charts
/// and checks multiplicities, stratum data, fiber orbit counts and the
/// intersection numbers on each exceptional plane against the
/// lemma-derived records in the SurfaceResolution.
VerifyReport verify_lift(const SurfaceResolution& sr, const SurfaceInput& input);

std::string json_export(const SurfaceResolution& sr, const SurfaceInput& input);
std::string dot_graph_3d(const SurfaceResolution& sr, const SurfaceInput& input);

} // namespace qres
