#include "qres/pipeline.hpp"

#include "qres/errors.hpp"
#include "qres/intersection.hpp"
#include "qres/oracles.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qres {

std::pair<long, long> detect_mk(const WPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("detect_mk: zero polynomial");
    if (f.constant_term() != 0) throw std::invalid_argument("detect_mk: f(0) != 0");
    std::map<long, bool> degrees;
    for (auto& [e, c] : f.terms()) degrees[e[0] + e[1] + e[2]] = true;
    long m = degrees.begin()->first;
    if (degrees.size() == 1)
        throw std::domain_error("detect_mk: f is homogeneous, no second part");
    long next = std::next(degrees.begin())->first;
    return {m, next - m};
}

namespace {

// dehomogenization charts of P^2; chart 0 sets z = 1, chart 1 sets y = 1,
// chart 2 sets x = 1. Local coordinates always occupy the (x,y) slots.
WPoly dehomogenize(const WPoly& f, int chart) {
    WPoly out;
    for (auto& [e, c] : f.terms()) {
        long a, b;
        if (chart == 0) a = e[0], b = e[1];
        else if (chart == 1) a = e[0], b = e[2];
        else a = e[1], b = e[2];
        out += WPoly::monomial(c, a, b);
    }
    return out;
}

std::array<Rat, 3> lift_point(int chart, const Rat& a, const Rat& b) {
    if (chart == 0) return {a, b, Rat(1)};
    if (chart == 1) return {a, Rat(1), b};
    return {Rat(1), a, b};
}

std::array<Rat, 3> normalize_projective(std::array<Rat, 3> p) {
    for (int i = 2; i >= 0; --i) {
        if (p[i] != 0) {
            for (auto& c : p) c /= p[i];
            return p;
        }
    }
    throw std::invalid_argument("zero projective point");
}

std::string point_label(const std::array<Rat, 3>& p) {
    return "[" + to_string(p[0]) + ":" + to_string(p[1]) + ":" + to_string(p[2]) + "]";
}

Rat eval3(const WPoly& f, const std::array<Rat, 3>& p) { return f.eval(p[0], p[1], p[2]); }

// rational roots of a univariate polynomial in slot `var`
std::vector<Rat> rational_roots_of(const WPoly& u, int var) {
    std::vector<Rat> out;
    if (u.is_zero()) return out;
    for (auto& [root, mult] : upoly_rational_roots(u.univariate(var))) out.push_back(root);
    return out;
}

} // namespace

std::vector<SingularPoint> sing_points(const WPoly& fm) {
    if (fm.max_exponent(2) == 0 && fm.max_exponent(1) == 0)
        throw std::invalid_argument("sing_points expects a ternary form");
    WPoly fx = fm.derivative(0), fy = fm.derivative(1), fz = fm.derivative(2);

    std::vector<std::array<Rat, 3>> found;
    bool possibly_irrational = false;

    for (int chart = 0; chart < 3; ++chart) {
        WPoly g[3] = {dehomogenize(fx, chart), dehomogenize(fy, chart), dehomogenize(fz, chart)};
        // pairwise resultants in the second chart variable
        std::vector<WPoly> res;
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) {
                if (g[a].is_zero() || g[b].is_zero()) continue;
                res.push_back(resultant(g[a], g[b], 1));
            }
        bool all_zero = true;
        for (auto& r : res)
            if (!r.is_zero()) all_zero = false;
        if (res.empty() || all_zero) {
            // the partials share a curve: the cone is non-reduced or has
            // non-isolated singularities
            bool any_nonzero_partial = !fx.is_zero() || !fy.is_zero() || !fz.is_zero();
            if (any_nonzero_partial)
                throw ScopeError("tangent cone is not reduced (positive-dimensional singular locus)");
            continue;
        }
        // gcd of the nonzero pairwise resultants
        UPoly s{Rat(0)};
        for (auto& r : res) {
            if (r.is_zero()) continue;
            UPoly u = r.univariate(0);
            s = upoly_deg(s) < 0 ? u : upoly_gcd(s, u);
        }
        // candidate x-values: rational roots of s; anything left over may
        // hide an irrational singular point
        UPoly remaining = s;
        for (auto& [root, mult] : upoly_rational_roots(s)) {
            UPoly lin{-root, Rat(1)};
            for (long i = 0; i < mult; ++i) remaining = upoly_divmod(remaining, lin).first;
            // common rational y-values at this x
            std::vector<Rat> ys;
            for (int a = 0; a < 3 && ys.empty(); ++a) {
                WPoly ua = g[a].eval_var(0, root);
                if (ua.is_zero()) continue;
                ys = rational_roots_of(ua, 1);
            }
            long irrational_y_degree = 0;
            {
                // degree of the common factor minus rational roots found
                UPoly common{Rat(0)};
                bool common_set = false;
                for (int a = 0; a < 3; ++a) {
                    WPoly ua = g[a].eval_var(0, root);
                    if (ua.is_zero()) continue;
                    UPoly u = ua.univariate(1);
                    common = common_set ? upoly_gcd(common, u) : u;
                    common_set = true;
                }
                if (common_set) {
                    long rational = 0;
                    for (auto& [yr, ym] : upoly_rational_roots(common)) rational += ym;
                    irrational_y_degree = std::max<long>(0, upoly_deg(common) - rational);
                }
            }
            if (irrational_y_degree > 0) possibly_irrational = true;
            for (auto& y0 : ys) {
                bool singular = true;
                for (int a = 0; a < 3; ++a)
                    if (g[a].eval(root, y0) != 0) singular = false;
                if (!singular) continue;
                found.push_back(normalize_projective(lift_point(chart, root, y0)));
            }
        }
        if (upoly_deg(remaining) > 0) possibly_irrational = true;
    }

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());

    std::vector<SingularPoint> out;
    for (auto& p : found) {
        int chart = p[2] != 0 ? 0 : (p[1] != 0 ? 1 : 2);
        WPoly local = dehomogenize(fm, chart);
        Rat a, b;
        if (chart == 0) a = p[0], b = p[1];
        else if (chart == 1) a = p[0], b = p[2];
        else a = p[1], b = p[2];
        WPoly germ = local.translate(a, b);
        if (germ.order() < 2) throw std::logic_error("singular point with smooth germ");
        out.push_back({p, point_label(p), germ});
    }
    if (possibly_irrational)
        throw ScopeError("the tangent cone may have singular points with non-rational "
                         "coordinates; pass the local germs explicitly with --germ");
    return out;
}

bool check_condition(const WPoly& f, long m, long k, const std::vector<SingularPoint>& pts,
                     std::vector<std::string>* offending) {
    WPoly part;
    for (auto& [e, c] : f.terms())
        if (e[0] + e[1] + e[2] == m + k) part += WPoly::monomial(c, e[0], e[1], e[2]);
    bool ok = true;
    for (auto& p : pts) {
        if (eval3(part, p.coords) == 0) {
            ok = false;
            if (offending) offending->push_back(p.label);
        }
    }
    return ok;
}

namespace {

void verify_curve_oracles(const WPoly& germ, const CurveResolution& res, const CharProduct& delta,
                          const Int& mu, std::vector<std::string>& lines) {
    Int mu_jac = milnor_jacobian(germ);
    if (mu_jac != mu)
        throw VerificationError("Jacobian Milnor number " + to_string(mu_jac) +
                                " differs from the A'Campo value " + to_string(mu));
    lines.push_back("jacobian milnor number agrees: " + to_string(mu));
    try {
        CharProduct classical = classical_charpoly(germ);
        if (!(to_cyclotomic(classical) == to_cyclotomic(delta)))
            throw VerificationError("classical-resolution characteristic polynomial differs");
        lines.push_back("classical resolution charpoly agrees");
    } catch (const ScopeError& e) {
        lines.push_back(std::string("classical resolution not applicable: ") + e.what());
    }
    verify_curve_intersections(res);
    lines.push_back("divisor intersection totals are consistent");
}

ResultDocument run_curve(const JobConfig& job) {
    if (!job.input) throw std::invalid_argument("curve mode needs a polynomial");
    const WPoly& h = *job.input;
    if (h.max_exponent(2) > 0)
        throw std::invalid_argument("curve mode expects a polynomial in x and y");
    ResultDocument doc;
    doc.mode = "curve";
    doc.input = h.str();
    CurveResolution res = resolve_curve(h, job.weights);
    doc.delta = curve_charpoly(res);
    doc.delta_cyclotomic = to_cyclotomic(doc.delta);
    doc.delta_expanded = expand(doc.delta);
    doc.mu = milnor_number(doc.delta);
    if (Int((long)doc.delta_expanded.size() - 1) != doc.mu)
        throw VerificationError("degree of the expanded polynomial differs from mu");

    ResultDocument::PointData pd;
    pd.label = "origin";
    pd.germ = h.str();
    pd.mu = doc.mu;
    pd.delta = doc.delta;
    pd.dot_plus = dot_graph(res, false);
    pd.dot_total = dot_graph(res, true);
    pd.json = json_export(res);
    doc.points.push_back(std::move(pd));

    if (job.verify) {
        verify_curve_oracles(h, res, doc.delta, doc.mu, doc.verification);
        doc.verified = true;
    }
    return doc;
}

ResultDocument run_surface(const JobConfig& job) {
    ResultDocument doc;
    doc.mode = "surface";

    SurfaceInput input;
    std::vector<SingularPoint> pts;

    if (job.input && !job.germs.empty())
        throw std::invalid_argument("surface mode takes a polynomial or --germ data, not both");
    if (job.input) {
        const WPoly& f = *job.input;
        doc.input = f.str();
        auto [m, k] = detect_mk(f);
        if (m < 2) throw ScopeError("surface is smooth (multiplicity < 2)");
        input.m = m;
        input.k = k;
        WPoly fm;
        for (auto& [e, c] : f.terms())
            if (e[0] + e[1] + e[2] == m) fm += WPoly::monomial(c, e[0], e[1], e[2]);
        if (!job.sing_hints.empty()) {
            for (auto& hint : job.sing_hints) {
                auto p = normalize_projective(hint);
                int chart = p[2] != 0 ? 0 : (p[1] != 0 ? 1 : 2);
                WPoly local = dehomogenize(fm, chart);
                Rat a, b;
                if (chart == 0) a = p[0], b = p[1];
                else if (chart == 1) a = p[0], b = p[2];
                else a = p[1], b = p[2];
                WPoly germ = local.translate(a, b);
                if (germ.order() < 2)
                    throw ScopeError("point " + point_label(p) + " is not a singular point");
                pts.push_back({p, point_label(p), germ});
            }
        } else {
            pts = sing_points(fm);
        }
        std::vector<std::string> offending;
        if (!check_condition(f, m, k, pts, &offending)) {
            std::string msg = "the transversality condition fails at:";
            for (auto& s : offending) msg += " " + s;
            throw ScopeError(msg);
        }
        for (auto& p : pts) {
            SurfacePoint sp;
            sp.label = p.label;
            sp.germ = p.germ;
            sp.resolution = resolve_curve(p.germ, job.weights);
            sp.mu = curve_milnor(sp.resolution);
            input.points.push_back(std::move(sp));
        }
    } else {
        if (job.germs.empty())
            throw std::invalid_argument("surface mode needs a polynomial or --germ data");
        if (job.m < 2) throw std::invalid_argument("germ mode needs the cone degree m >= 2");
        input.m = job.m;
        input.k = job.k >= 1 ? job.k : 1;
        doc.input = "(germ list)";
        for (auto& g : job.germs) {
            SurfacePoint sp;
            sp.label = g.label;
            sp.germ = g.germ;
            sp.resolution = resolve_curve(g.germ, job.weights);
            sp.mu = curve_milnor(sp.resolution);
            if (g.mu && *g.mu != sp.mu)
                throw VerificationError("declared Milnor number " + to_string(*g.mu) + " at " +
                                        g.label + " differs from the computed " +
                                        to_string(sp.mu));
            input.points.push_back(std::move(sp));
        }
    }

    doc.m = input.m;
    doc.k = input.k;
    SurfaceResolution sr = input.k == 1 ? lift_sis(input) : lift_yls(input);
    doc.delta = surface_charpoly(sr);
    doc.delta_cyclotomic = to_cyclotomic(doc.delta);
    doc.mu = milnor_number(doc.delta);

    // closed formula and A'Campo assembly must agree exactly
    CharProduct closed = surface_charpoly_closed(input);
    if (!(to_cyclotomic(closed) == doc.delta_cyclotomic))
        throw VerificationError("chart-level A'Campo and the closed formula disagree: " +
                                doc.delta.str() + " vs " + closed.str());
    doc.verification.push_back("closed formula agrees with the A'Campo assembly");

    // Milnor number identity
    Int expected_mu = Int(input.m - 1) * (input.m - 1) * (input.m - 1) +
                      Int(input.k) * input.total_mu();
    if (doc.mu != expected_mu)
        throw VerificationError("mu = " + to_string(doc.mu) + " differs from (m-1)^3 + k sum mu = " +
                                to_string(expected_mu));
    doc.verification.push_back("mu = (m-1)^3 + k * sum of local Milnor numbers = " +
                               to_string(doc.mu));

    // polynomiality and the leading exponent
    if (!doc.delta_cyclotomic.is_polynomial())
        throw VerificationError("characteristic polynomial has a negative cyclotomic exponent");
    {
        auto it = doc.delta.factors().find(Int(input.m));
        Int lead = it == doc.delta.factors().end() ? Int(0) : it->second;
        if (lead != sr.chi_complement)
            throw VerificationError("exponent of (t^m - 1) differs from chi(P^2 - C)");
        doc.verification.push_back("exponent of (t^m-1) equals chi(P^2 - C) = " +
                                   to_string(sr.chi_complement));
    }
    doc.delta_expanded = expand(doc.delta);
    if (Int((long)doc.delta_expanded.size() - 1) != doc.mu)
        throw VerificationError("degree of the expanded polynomial differs from mu");

    for (auto& sp : input.points) {
        ResultDocument::PointData pd;
        pd.label = sp.label;
        pd.germ = sp.germ.str();
        pd.mu = sp.mu;
        pd.delta = curve_charpoly(sp.resolution);
        pd.dot_plus = dot_graph(sp.resolution, false);
        pd.dot_total = dot_graph(sp.resolution, true);
        pd.json = json_export(sp.resolution);
        doc.points.push_back(std::move(pd));
    }
    doc.surface_json = json_export(sr, input);
    doc.surface_dot = dot_graph_3d(sr, input);

    if (job.verify) {
        for (auto& sp : input.points) {
            std::vector<std::string> lines;
            verify_curve_oracles(sp.germ, sp.resolution, curve_charpoly(sp.resolution), sp.mu,
                                 lines);
            for (auto& l : lines) doc.verification.push_back(sp.label + ": " + l);
        }
        VerifyReport rep = verify_lift(sr, input);
        if (!rep.ok()) throw VerificationError("chart-level lift checks failed:\n" + rep.summary());
        doc.verification.push_back("chart-level lift verification: " +
                                   std::to_string(rep.checks.size()) + " checks passed");
        doc.verified = true;
    }
    return doc;
}

} // namespace

ResultDocument run(const JobConfig& job) {
    return job.mode == JobConfig::Mode::Curve ? run_curve(job) : run_surface(job);
}

std::string ResultDocument::factored() const { return delta.str(); }

std::string ResultDocument::expanded() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < delta_expanded.size(); ++i) {
        if (i) os << ", ";
        os << to_string(delta_expanded[i]);
    }
    os << "]";
    return os.str();
}

std::string ResultDocument::text_summary() const {
    std::ostringstream os;
    os << "mode: " << mode << "\n";
    os << "input: " << input << "\n";
    if (mode == "surface") os << "m = " << m << ", k = " << k << "\n";
    for (auto& p : points)
        os << "  " << p.label << ": germ " << p.germ << ", mu = " << to_string(p.mu)
           << ", Delta = " << p.delta.str() << "\n";
    os << "Delta = " << delta.str() << "\n";
    os << "     = " << delta_cyclotomic.str() << "\n";
    os << "mu = " << to_string(mu) << "\n";
    for (auto& v : verification) os << "verified: " << v << "\n";
    return os.str();
}

std::string ResultDocument::to_json() const {
    nlohmann::json j;
    j["mode"] = mode;
    j["input"] = input;
    if (mode == "surface") {
        j["m"] = m;
        j["k"] = k;
    }
    j["points"] = nlohmann::json::array();
    for (auto& p : points) {
        nlohmann::json jp;
        jp["label"] = p.label;
        jp["germ"] = p.germ;
        jp["mu"] = to_string(p.mu);
        jp["delta_factored"] = p.delta.str();
        jp["resolution"] = nlohmann::json::parse(p.json);
        j["points"].push_back(jp);
    }
    j["delta_factored"] = delta.str();
    j["delta_cyclotomic"] = nlohmann::json::object();
    for (auto& [d, c] : delta_cyclotomic.c) j["delta_cyclotomic"][to_string(d)] = to_string(c);
    j["delta_expanded"] = nlohmann::json::array();
    for (auto& c : delta_expanded) j["delta_expanded"].push_back(to_string(c));
    j["mu"] = to_string(mu);
    if (!surface_json.empty()) j["surface"] = nlohmann::json::parse(surface_json);
    j["verification"] = verification;
    j["verified"] = verified;
    return j.dump(2);
}

} // namespace qres
