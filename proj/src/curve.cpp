#include "qres/curve.hpp"

#include "qres/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qres {

std::string Site::point_description() const {
    switch (kind) {
        case CenterKind::Root: return "origin";
        case CenterKind::Origin1: return "chart-1 origin of step " + std::to_string(parent_step);
        case CenterKind::Origin2: return "chart-2 origin of step " + std::to_string(parent_step);
        case CenterKind::Interior:
            return "interior point y=" + to_string(translation) + " of step " +
                   std::to_string(parent_step);
    }
    return "?";
}

std::pair<long, long> newton_weights(const WPoly& h) {
    if (h.is_zero()) throw std::invalid_argument("newton_weights: zero polynomial");
    if (h.constant_term() != 0) throw std::invalid_argument("newton_weights: germ does not vanish at the origin");
    // support points, dominated ones removed
    std::vector<std::pair<long, long>> pts;
    for (auto& [e, c] : h.terms()) pts.push_back({e[0], e[1]});
    std::sort(pts.begin(), pts.end());
    std::vector<std::pair<long, long>> stair;
    for (auto& p : pts) {
        bool dominated = false;
        for (auto& q : pts)
            if (q != p && q.first <= p.first && q.second <= p.second) dominated = true;
        if (!dominated) stair.push_back(p);
    }
    std::sort(stair.begin(), stair.end());   // i ascending, j strictly descending
    if (stair.size() == 1) {
        auto [i, j] = stair[0];
        if (i >= 1 && j >= 1) return {1, 1};   // germ x^i y^j, both axes present
        throw std::invalid_argument("newton_weights: monomial germ (non-isolated singularity)");
    }
    // lower convex hull
    std::vector<std::pair<long, long>> hull;
    for (auto& p : stair) {
        while (hull.size() >= 2) {
            auto [ax, ay] = hull[hull.size() - 2];
            auto [bx, by] = hull[hull.size() - 1];
            long cross = (bx - ax) * (p.second - by) - (by - ay) * (p.first - bx);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(p);
    }
    // candidate faces with their lowest touching total degree
    long best_p = 0, best_q = 0, best_deg = -1;
    for (std::size_t f = 0; f + 1 < hull.size(); ++f) {
        auto [i1, j1] = hull[f];
        auto [i2, j2] = hull[f + 1];
        long p = j1 - j2, q = i2 - i1;
        long g = to_long(gcd(Int(p), Int(q)));
        p /= g;
        q /= g;
        long nu = p * i1 + q * j1;
        long face_deg = -1;
        for (auto& [i, j] : pts)
            if (p * i + q * j == nu && (face_deg < 0 || i + j < face_deg)) face_deg = i + j;
        if (best_deg < 0 || face_deg < best_deg ||
            (face_deg == best_deg && p + q > best_p + best_q)) {
            best_p = p;
            best_q = q;
            best_deg = face_deg;
        }
    }
    return {best_p, best_q};
}

CurveResolver::CurveResolver(WPoly germ, WeightStrategy strategy) : strategy_(strategy) {
    if (germ.max_exponent(2) > 0)
        throw std::invalid_argument("resolve_curve expects a germ in x and y");
    if (germ.is_zero()) throw std::invalid_argument("resolve_curve: zero polynomial");
    result_.germ = germ;
    if (germ.constant_term() != 0 || germ.order() <= 1)
        return;                           // smooth germ: vacuous resolution
    Site root;
    root.type = QuotientType::trivial(2);
    root.germ = germ;
    root.kind = CenterKind::Root;
    pending_.push_back(root);
}

std::pair<long, long> CurveResolver::choose_weights(const WPoly& h) {
    switch (strategy_.mode) {
        case WeightStrategy::Mode::Auto: return newton_weights(h);
        case WeightStrategy::Mode::Classical: return {1, 1};
        case WeightStrategy::Mode::Script:
            if (script_pos_ >= strategy_.script.size())
                throw ScopeError("weight script exhausted after " +
                                 std::to_string(script_pos_) + " blow-ups");
            return strategy_.script[script_pos_++];
    }
    return {1, 1};
}

void CurveResolver::step() {
    if (pending_.empty()) return;
    if (++steps_taken_ > 500)
        throw std::runtime_error("resolution did not terminate within 500 blow-ups");
    Site site = pending_.front();
    pending_.erase(pending_.begin());
    blow_up(site);
}

void CurveResolver::blow_up(const Site& site) {
    auto [p, q] = choose_weights(site.germ);
    if (p < 1 || q < 1 || gcd(Int(p), Int(q)) != 1)
        throw std::invalid_argument("blow-up weights must be positive and coprime");

    Int e_amb = 1, r = 0, s = 0;
    if (!site.type.is_trivial()) {
        e_amb = site.type.orders[0];
        r = site.type.weights[0][0];
        s = site.type.weights[0][1];
    }
    const Int nu = w_order(site.germ, p, q);
    const Int d = gcd(e_amb, Int(p) * s - Int(q) * r);
    Int m_raw = Int(p) * site.mult_x + Int(q) * site.mult_y + nu;
    if (m_raw % d != 0)
        throw std::logic_error("divisor multiplicity is not integral (broken invariant)");
    const Int m_b = m_raw / d;

    const Int E1 = e_amb * p / d;   // chart-1 group order
    const Int E2 = e_amb * q / d;
    Int sp = 0, rp = 0;
    if (e_amb > 1) {
        sp = mod_reduce(-s * mod_inverse(r, e_amb), e_amb);
        rp = mod_reduce(-r * mod_inverse(s, e_amb), e_amb);
    }
    QuotientType chart1 = simplify_type(QuotientType::cyclic(E1, {Int(-1), (Int(q) + sp * p) / d}));
    QuotientType chart2 = simplify_type(QuotientType::cyclic(E2, {(Int(p) + rp * q) / d, Int(-1)}));

    auto [nu1, h1] = strict_transform(site.germ, p, q, 1);
    auto [nu2, h2] = strict_transform(site.germ, p, q, 2);
    WPoly germ1 = (d > 1) ? h1.root_substitute(0, to_long(d)) : h1;
    WPoly germ2 = (d > 1) ? h2.root_substitute(1, to_long(d)) : h2;

    WHomogPiece piece{p, q, nu, site.germ.homogeneous_part(0)};
    piece.part = WPoly();
    for (auto& [e, c] : site.germ.terms())
        if (Int(p) * e[0] + Int(q) * e[1] == nu) piece.part += WPoly::monomial(c, e[0], e[1]);
    FactoredWHomog leading = factor_whomog(piece);

    const int id = (int)result_.divisors.size();
    const int step_index = (int)result_.steps.size();

    DivisorInfo2D div;
    div.id = id;
    div.p = p;
    div.q = q;
    div.nu = nu;
    div.m = m_b;
    div.ambient_order = e_amb;
    div.blowup_gcd = d;
    div.chart1 = chart1;
    div.chart2 = chart2;
    div.self_intersection = exc_self_int(e_amb, p, q, d);
    div.depth = (site.kind == CenterKind::Root)
                    ? 1
                    : result_.divisors[result_.steps[site.parent_step].divisor_id].depth + 1;

    // adjacency with the axis divisors; a blow-up at their crossing separates them
    if (site.div_x >= 0 && site.div_y >= 0) {
        auto& ex = result_.divisors[site.div_x].edges;
        auto& ey = result_.divisors[site.div_y].edges;
        auto drop = [](std::vector<DivisorInfo2D::Edge>& es, int other) {
            for (auto it = es.begin(); it != es.end(); ++it)
                if (it->other == other) {
                    es.erase(it);
                    return;
                }
        };
        drop(ex, site.div_y);
        drop(ey, site.div_x);
    }
    if (site.div_y >= 0) {
        Rat local(d, e_amb * p);
        div.edges.push_back({site.div_y, local, 1, "origin1"});
        result_.divisors[site.div_y].edges.push_back({id, local, 1, "origin1 of E" + std::to_string(id)});
        result_.divisors[site.div_y].self_intersection -= Rat(q, e_amb * p);
    }
    if (site.div_x >= 0) {
        Rat local(d, e_amb * q);
        div.edges.push_back({site.div_x, local, 1, "origin2"});
        result_.divisors[site.div_x].edges.push_back({id, local, 1, "origin2 of E" + std::to_string(id)});
        result_.divisors[site.div_x].self_intersection -= Rat(p, e_amb * q);
    }

    const long einf = leading.einf, e0 = leading.e0;
    div.origin1_free = (site.div_y < 0) && (einf == 0);
    div.origin2_free = (site.div_x < 0) && (e0 == 0);

    // stable transversal crossings of the strict transform at the chart origins
    if (einf == 1 && site.div_y < 0) div.edges.push_back({-1, Rat(1, E1), 1, "origin1"});
    if (e0 == 1 && site.div_x < 0) div.edges.push_back({-1, Rat(1, E2), 1, "origin2"});

    // interior crossings, grouped by intersection multiplicity; the group
    // acts freely away from the chart origins, so orbits have size E1
    std::map<long, long> class_degree;
    for (auto& f : leading.factors) class_degree[f.mult] += f.w_degree;
    std::vector<Site> children;
    for (auto& [mult, wdeg] : class_degree) {
        Int roots(p);
        roots *= wdeg;
        if (roots % E1 != 0)
            throw std::logic_error("interior root count is not a multiple of the orbit size");
        long orbits = to_long(roots / E1);
        div.interior_marked += orbits;
        if (mult == 1) {
            div.edges.push_back({-1, Rat(mult), orbits, "interior"});
            continue;
        }
        // non-transversal: each orbit needs a rational representative
        WPoly cls(Rat(1));
        for (auto& f : leading.factors)
            if (f.mult == mult) cls *= f.form.eval_var(0, Rat(1));
        auto roots_q = upoly_rational_roots(cls.univariate(1));
        std::vector<Rat> reps;
        bool minus_one_in_orbit = (E1 % 2 == 0);
        for (auto& [y0, rm] : roots_q) {
            bool seen = false;
            for (auto& r0 : reps)
                if (r0 == y0 || (minus_one_in_orbit && r0 == -y0)) seen = true;
            if (!seen) reps.push_back(y0);
        }
        if ((long)reps.size() != orbits)
            throw ScopeError("non-rational center: tangential intersection points of " +
                             cls.str() + " on the exceptional divisor of step " +
                             std::to_string(step_index) + " have no rational representatives");
        std::sort(reps.begin(), reps.end());
        for (auto& y0 : reps) {
            Site child;
            child.type = QuotientType::trivial(2);
            child.div_x = id;
            child.mult_x = m_b;
            child.germ = germ1.translate(Rat(0), y0);
            child.kind = CenterKind::Interior;
            child.parent_step = step_index;
            child.translation = y0;
            children.push_back(std::move(child));
        }
    }

    // chart origins
    if (einf + (site.div_y >= 0 ? 1 : 0) >= 2) {
        Site child;
        child.type = chart1;
        child.div_x = id;
        child.mult_x = m_b;
        child.div_y = site.div_y;
        child.mult_y = site.mult_y;
        child.germ = germ1;
        child.kind = CenterKind::Origin1;
        child.parent_step = step_index;
        children.insert(children.begin(), child);
    }
    if (e0 + (site.div_x >= 0 ? 1 : 0) >= 2) {
        Site child;
        child.type = chart2;
        child.div_x = site.div_x;
        child.mult_x = site.mult_x;
        child.div_y = id;
        child.mult_y = m_b;
        child.germ = germ2;
        child.kind = CenterKind::Origin2;
        child.parent_step = step_index;
        auto pos = children.begin();
        if (!children.empty() && children.front().kind == CenterKind::Origin1) ++pos;
        children.insert(pos, child);
    }

    ResolutionStep step{id, site, p, q, nu, d, chart1, chart2, germ1, germ2, leading, einf, e0};
    result_.divisors.push_back(std::move(div));
    result_.steps.push_back(std::move(step));
    for (auto& c : children) pending_.push_back(std::move(c));
}

CurveResolution CurveResolver::take_result() {
    while (!done()) step();
    return std::move(result_);
}

CurveResolution resolve_curve(const WPoly& h, WeightStrategy strategy) {
    CurveResolver r(h, strategy);
    return r.take_result();
}

std::vector<Stratum2D> curve_strata(const CurveResolution& res) {
    std::vector<Stratum2D> out;
    for (auto& div : res.divisors) {
        out.push_back({div.id, '1', Int(-div.interior_marked), div.m});
        auto origin = [&](char kind, bool free, const QuotientType& chart, int coord) {
            Stratum2D s{div.id, kind, Int(free ? 1 : 0), Int(0)};
            if (free) {
                Int L = multiplicity_L(chart, coord);
                if (div.m % L != 0)
                    throw std::logic_error("stratum multiplicity is not integral");
                s.mult = div.m / L;
            }
            out.push_back(s);
        };
        origin('x', div.origin1_free, div.chart1, 0);
        origin('y', div.origin2_free, div.chart2, 1);
    }
    return out;
}

std::vector<std::pair<Int, Int>> acampo_strata(const CurveResolution& res) {
    std::vector<std::pair<Int, Int>> out;
    for (auto& s : curve_strata(res))
        if (s.chi != 0) out.push_back({s.mult, s.chi});
    return out;
}

CharProduct curve_charpoly(const CurveResolution& res) {
    if (res.divisors.empty()) return CharProduct::one();   // smooth germ
    return acampo(acampo_strata(res), 1);
}

Int curve_milnor(const CurveResolution& res) { return milnor_number(curve_charpoly(res)); }

Rat CurveResolution::strict_dot_divisor(int id) const {
    Rat total = 0;
    for (auto& e : divisors[id].edges)
        if (e.other == -1) total += e.local_number * e.orbit_points;
    return total;
}

void verify_curve_intersections(const CurveResolution& res) {
    for (auto& div : res.divisors) {
        Rat total = div.self_intersection * Rat(div.m);
        for (auto& e : div.edges) {
            if (e.other == -1) total += e.local_number * e.orbit_points;
            else total += e.local_number * Rat(res.divisors[e.other].m);
        }
        if (total != 0)
            throw VerificationError("E" + std::to_string(div.id) +
                                    " . (total transform) = " + to_string(total) + ", expected 0");
    }
}

std::string dot_graph(const CurveResolution& res, bool with_branches) {
    std::ostringstream os;
    os << "graph resolution {\n";
    for (auto& d : res.divisors) {
        os << "  E" << d.id << " [label=\"E" << d.id << " (" << d.p << "," << d.q << ") nu="
           << to_string(d.nu) << " m=" << to_string(d.m)
           << " self=" << to_string(d.self_intersection) << "\"];\n";
    }
    int branch = 0;
    for (auto& d : res.divisors) {
        for (auto& e : d.edges) {
            if (e.other >= 0) {
                if (e.other > d.id) os << "  E" << d.id << " -- E" << e.other << ";\n";
            } else if (with_branches) {
                os << "  C" << branch << " [label=\"C (" << e.orbit_points << " pt"
                   << (e.orbit_points == 1 ? "" : "s") << ")\" shape=box];\n";
                os << "  E" << d.id << " -- C" << branch << ";\n";
                ++branch;
            }
        }
    }
    os << "}\n";
    return os.str();
}

std::string json_export(const CurveResolution& res) {
    nlohmann::json j;
    j["germ"] = res.germ.str();
    j["divisors"] = nlohmann::json::array();
    for (auto& d : res.divisors) {
        nlohmann::json jd;
        jd["id"] = d.id;
        jd["weights"] = {d.p, d.q};
        jd["nu"] = to_string(d.nu);
        jd["m"] = to_string(d.m);
        jd["self_intersection"] = to_string(d.self_intersection);
        jd["chart1"] = d.chart1.str();
        jd["chart2"] = d.chart2.str();
        jd["depth"] = d.depth;
        jd["edges"] = nlohmann::json::array();
        for (auto& e : d.edges) {
            jd["edges"].push_back({{"other", e.other},
                                   {"local_number", to_string(e.local_number)},
                                   {"orbit_points", e.orbit_points},
                                   {"at", e.at}});
        }
        j["divisors"].push_back(jd);
    }
    j["strata"] = nlohmann::json::array();
    for (auto& s : curve_strata(res)) {
        j["strata"].push_back({{"divisor", s.divisor},
                               {"kind", std::string(1, s.kind)},
                               {"chi", to_string(s.chi)},
                               {"mult", to_string(s.mult)}});
    }
    return j.dump(2);
}

} // namespace qres
