#pragma once

#include "qres/charproduct.hpp"
#include "qres/curve.hpp"
#include "qres/surface.hpp"
#include "qres/wpoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qres {

/// Orders of the two lowest nonzero homogeneous parts of f: returns (m, k)
/// with f = f_m + f_{m+k} + ... . Throws when f is homogeneous (no k).
std::pair<long, long> detect_mk(const WPoly& f);

struct SingularPoint {
    std::array<Rat, 3> coords;   // projective representative, last nonzero = 1
    std::string label;
    WPoly germ;                  // local equation after moving P to the origin
};

/// Rational singular points of the reduced projective curve f_m = 0,
/// located by resultant elimination and rational root extraction in the
/// three affine charts. Raises a ScopeError when singular points outside
/// the rational ones may exist.
std::vector<SingularPoint> sing_points(const WPoly& fm);

/// Checks f_{m+k}(P) != 0 for every singular point; offending labels are
/// appended when given.
bool check_condition(const WPoly& f, long m, long k, const std::vector<SingularPoint>& pts,
                     std::vector<std::string>* offending = nullptr);

struct JobConfig {
    enum class Mode { Curve, Surface } mode = Mode::Curve;
    std::optional<WPoly> input;
    struct GermEntry {
        WPoly germ;
        std::optional<Int> mu;
        std::string label;
    };
    std::vector<GermEntry> germs;            // surface germ mode
    long m = 0;                              // required with germs
    long k = 1;
    std::vector<std::array<Rat, 3>> sing_hints;
    WeightStrategy weights;
    bool verify = false;
};

struct ResultDocument {
    std::string mode;
    std::string input;
    long m = 0, k = 0;

    struct PointData {
        std::string label;
        std::string germ;
        Int mu;
        CharProduct delta;
        std::string dot_plus;    // exceptional dual graph
        std::string dot_total;
        std::string json;        // full curve resolution
    };
    std::vector<PointData> points;

    CharProduct delta;
    CyclotomicVector delta_cyclotomic;
    PolyZ delta_expanded;
    Int mu = 0;

    std::string surface_json;    // empty in curve mode
    std::string surface_dot;

    std::vector<std::string> verification;
    bool verified = false;

    std::string to_json() const;
    std::string factored() const;
    std::string expanded() const;
    std::string text_summary() const;
};

ResultDocument run(const JobConfig& job);

} // namespace qres
