#pragma once

#include "qres/charproduct.hpp"
#include "qres/intersection.hpp"
#include "qres/quotient.hpp"
#include "qres/rational.hpp"
#include "qres/wpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qres {

/// How the center of a blow-up sits on the previously created divisor.
enum class CenterKind {
    Root,       // the original singular point
    Origin1,    // origin of chart 1 (point [1:0] of the parent divisor)
    Origin2,    // origin of chart 2 (point [0:1])
    Interior    // rational interior point of the parent divisor
};

/// Local model at a point scheduled for blow-up: a normalized one-row
/// ambient type with the total transform x^{mx} y^{my} H(x,y).
struct Site {
    QuotientType type;       // one-row (e; r, s), gcd(e,r) = gcd(e,s) = 1
    int div_x = -1;          // divisor along {x = 0}, -1 if absent
    int div_y = -1;
    Int mult_x = 0;
    Int mult_y = 0;
    WPoly germ;              // strict transform through the origin

    // provenance
    CenterKind kind = CenterKind::Root;
    int parent_step = -1;    // index into CurveResolution::steps
    Rat translation = 0;     // Interior: y-offset in the parent chart 1

    std::string point_description() const;
};

struct DivisorInfo2D {
    int id = 0;
    long p = 1, q = 1;         // blow-up weights
    Int nu = 0;                // (p,q)-multiplicity of the germ at the center
    Int m = 0;                 // multiplicity in the total transform
    Int ambient_order = 1;     // group order of the site type at the center
    Int blowup_gcd = 1;        // gcd(e, p s - q r) of the blow-up
    QuotientType chart1;       // local type at [1:0] (exceptional x = 0)
    QuotientType chart2;       // local type at [0:1] (exceptional y = 0)
    Rat self_intersection;
    int depth = 1;             // 1 for the divisor over the original point

    struct Edge {
        int other;             // divisor id, or -1 for a strict-transform branch
        Rat local_number;      // intersection number at the meeting point
        long orbit_points = 1; // strict-transform crossings grouped by orbit
        std::string at;
    };
    std::vector<Edge> edges;

    // strata bookkeeping
    bool origin1_free = true;  // nothing else passes through [1:0]
    bool origin2_free = true;
    long interior_marked = 0;  // removed interior orbit points
};

struct Stratum2D {
    int divisor;
    char kind;                 // '1', 'x' ([1:0]) or 'y' ([0:1])
    Int chi;
    Int mult;                  // m/L, computed when chi != 0
};

/// One blow-up in the resolution history, with everything the surface lift
/// and the chart-level verifier need to replay it.
struct ResolutionStep {
    int divisor_id;
    Site site;                 // local model before the blow-up
    long p, q;
    Int nu;
    Int d;                     // gcd(ambient order, p s - q r)
    QuotientType chart1, chart2;
    WPoly germ1, germ2;        // strict transforms on the two charts
    FactoredWHomog leading;
    long einf = 0, e0 = 0;     // y-/x-exponent of the leading piece
};

struct CurveResolution {
    WPoly germ;
    std::vector<DivisorInfo2D> divisors;
    std::vector<ResolutionStep> steps;

    Rat strict_dot_divisor(int id) const;   // total C . E_id
};

struct WeightStrategy {
    enum class Mode { Auto, Classical, Script } mode = Mode::Auto;
    std::vector<std::pair<long, long>> script;

    static WeightStrategy auto_newton() { return {}; }
    static WeightStrategy classical() { return {Mode::Classical, {}}; }
    static WeightStrategy from_script(std::vector<std::pair<long, long>> s) {
        return {Mode::Script, std::move(s)};
    }
};

/// Primitive inward normal of the compact Newton-polygon face touching the
/// monomials of lowest total degree (ties broken toward larger p+q).
std::pair<long, long> newton_weights(const WPoly& h);

/// Step-by-step resolver; pending() is the current locus of
/// non-transversality with its local models.
class CurveResolver {
public:
    CurveResolver(WPoly germ, WeightStrategy strategy = {});

    bool done() const { return pending_.empty(); }
    const std::vector<Site>& pending() const { return pending_; }
    void step();
    CurveResolution take_result();

private:
    void blow_up(const Site& site);
    std::pair<long, long> choose_weights(const WPoly& h);

    WeightStrategy strategy_;
    std::size_t script_pos_ = 0;
    std::vector<Site> pending_;
    CurveResolution result_;
    long steps_taken_ = 0;
};

CurveResolution resolve_curve(const WPoly& h, WeightStrategy strategy = {});

std::vector<Stratum2D> curve_strata(const CurveResolution& res);

/// Strata with chi != 0 as (multiplicity, chi) pairs for A'Campo.
std::vector<std::pair<Int, Int>> acampo_strata(const CurveResolution& res);

CharProduct curve_charpoly(const CurveResolution& res);
Int curve_milnor(const CurveResolution& res);

/// Exactness check: for every exceptional divisor E,
/// m E^2 + sum_adjacent m' (E . E') + C . E = 0.
void verify_curve_intersections(const CurveResolution& res);

std::string dot_graph(const CurveResolution& res, bool with_branches);
std::string json_export(const CurveResolution& res);

} // namespace qres
