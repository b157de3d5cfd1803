#include "doctest.h"

#include "qres/curve.hpp"
#include "qres/errors.hpp"
#include "qres/oracles.hpp"

#include <map>

using namespace qres;

TEST_CASE("newton weights") {
    CHECK(newton_weights(WPoly::parse("x^3 + y^2")) == std::pair<long, long>{2, 3});
    CHECK(newton_weights(WPoly::parse("x^2 + y^2")) == std::pair<long, long>{1, 1});
    // tie at the lowest touching degree broken toward larger p+q
    CHECK(newton_weights(WPoly::parse("x^5 + x^2*y^2 + y^6")) == std::pair<long, long>{2, 3});
    CHECK(newton_weights(WPoly::parse("x*y")) == std::pair<long, long>{1, 1});
    CHECK_THROWS_AS(newton_weights(WPoly::parse("y^3")), std::invalid_argument);
    CHECK_THROWS_AS(newton_weights(WPoly::parse("1 + x")), std::invalid_argument);
}

TEST_CASE("cusp resolution") {
    CurveResolution res = resolve_curve(WPoly::parse("x^3 + y^2"));
    REQUIRE(res.divisors.size() == 1);
    const auto& e1 = res.divisors[0];
    CHECK(e1.p == 2);
    CHECK(e1.q == 3);
    CHECK(e1.nu == 6);
    CHECK(e1.m == 6);
    CHECK(e1.self_intersection == Rat(-1, 6));

    std::map<char, std::pair<Int, Int>> by_kind;   // kind -> (chi, mult)
    for (auto& s : curve_strata(res)) by_kind[s.kind] = {s.chi, s.mult};
    CHECK(by_kind.at('1') == std::pair<Int, Int>{-1, 6});
    CHECK(by_kind.at('x') == std::pair<Int, Int>{1, 3});
    CHECK(by_kind.at('y') == std::pair<Int, Int>{1, 2});

    CHECK(expand(curve_charpoly(res)) == PolyZ{Int(1), Int(-1), Int(1)});
    CHECK(curve_milnor(res) == 2);
    verify_curve_intersections(res);

    // one orbit point of the strict transform on the exceptional line
    CHECK(res.strict_dot_divisor(0) == 1);
}

TEST_CASE("torus knot germs") {
    for (auto [p, q] : {std::pair<long, long>{2, 3},
                        {2, 5},
                        {3, 4},
                        {3, 5}}) {
        WPoly h = WPoly::monomial(Rat(1), q, 0) + WPoly::monomial(Rat(1), 0, p);
        CurveResolution res = resolve_curve(h);
        REQUIRE(res.divisors.size() == 1);
        CHECK(res.divisors[0].m == Int(p) * q);
        CHECK(to_cyclotomic(curve_charpoly(res)) == to_cyclotomic(torus_knot_delta(p, q)));
        CHECK(curve_milnor(res) == quasihomog_mu(p, q));
        CHECK(curve_milnor(res) == milnor_jacobian(h));
        verify_curve_intersections(res);
    }
}

TEST_CASE("ordinary-like triple point") {
    CurveResolution res = resolve_curve(WPoly::parse("x^2*y + y^3"));
    REQUIRE(res.divisors.size() == 1);
    long branch_points = 0;
    for (auto& e : res.divisors[0].edges)
        if (e.other == -1) branch_points += e.orbit_points;
    CHECK(branch_points == 3);
    CHECK(curve_milnor(res) == milnor_jacobian(WPoly::parse("x^2*y + y^3")));
    verify_curve_intersections(res);
}

TEST_CASE("normal crossing germ x*y") {
    CurveResolution res = resolve_curve(WPoly::parse("x*y"));
    REQUIRE(res.divisors.size() == 1);
    CHECK(res.divisors[0].m == 2);
    // both origin strata are blocked by the two branches
    for (auto& s : curve_strata(res)) CHECK(s.chi == 0);
    CHECK(expand(curve_charpoly(res)) == PolyZ{Int(-1), Int(1)});   // t - 1
    CHECK(curve_milnor(res) == 1);
    CHECK(curve_milnor(res) == milnor_jacobian(WPoly::parse("x*y")));
    verify_curve_intersections(res);
}

TEST_CASE("two tangential centers in distinct orbits") {
    // (y^2 - x^2)^2 + x^5: interior blow-ups at y = 1 and y = -1
    WPoly h = WPoly::parse("y^4 - 2*x^2*y^2 + x^4 + x^5");
    CurveResolution res = resolve_curve(h);
    long interior_steps = 0;
    for (auto& s : res.steps)
        if (s.site.kind == CenterKind::Interior) ++interior_steps;
    CHECK(interior_steps == 2);
    CHECK(curve_milnor(res) == milnor_jacobian(h));
    CHECK(to_cyclotomic(curve_charpoly(res)) == to_cyclotomic(classical_charpoly(h)));
    verify_curve_intersections(res);
}

TEST_CASE("degenerate germs are rejected") {
    CHECK_THROWS_AS(resolve_curve(WPoly::parse("0")), std::invalid_argument);
}

TEST_CASE("smooth germ gives a vacuous resolution") {
    CurveResolution res = resolve_curve(WPoly::parse("x + y^2"));
    CHECK(res.divisors.empty());
    CHECK(curve_strata(res).empty());
    CHECK(curve_charpoly(res) == CharProduct::one());
    CHECK(curve_milnor(res) == 0);
}

TEST_CASE("nt locus") {
    SUBCASE("cusp is resolved after one blow-up") {
        CurveResolver r(WPoly::parse("x^3 + y^2"));
        REQUIRE(!r.done());
        CHECK(r.pending().size() == 1);
        r.step();
        CHECK(r.done());
    }
    SUBCASE("smooth germ has empty locus") {
        CurveResolver r(WPoly::parse("x + y^3"));
        CHECK(r.done());
    }
    SUBCASE("intermediate state of a two-step resolution") {
        CurveResolver r(WPoly::parse("x^5 + x^2*y^2 + y^6"));
        r.step();
        REQUIRE(!r.done());
        CHECK(r.pending().size() == 1);
        CHECK(r.pending()[0].kind == CenterKind::Origin2);
        r.step();
        CHECK(r.done());
    }
}

TEST_CASE("two-face germ x^5 + x^2 y^2 + y^6") {
    WPoly h = WPoly::parse("x^5 + x^2*y^2 + y^6");
    CurveResolution res = resolve_curve(h);
    REQUIRE(res.divisors.size() == 2);
    CHECK(res.divisors[0].m == 10);
    CHECK(res.divisors[1].m == 6);
    CHECK(res.divisors[1].blowup_gcd == 3);
    CHECK(curve_milnor(res) == 12);
    CHECK(curve_milnor(res) == milnor_jacobian(h));
    verify_curve_intersections(res);

    // E2 carries two interior orbit points of the strict transform
    CHECK(res.strict_dot_divisor(1) == 2);
}

TEST_CASE("interior tangential center with translation") {
    // (y^2 - x^3)^2 + x^7 y resolves through a rational interior point
    WPoly h = WPoly::parse("y^4 - 2*x^3*y^2 + x^6 + x^7*y");
    CurveResolution res = resolve_curve(h);
    CHECK(res.divisors.size() >= 2);
    bool saw_interior = false;
    for (auto& s : res.steps)
        if (s.site.kind == CenterKind::Interior) {
            saw_interior = true;
            CHECK(s.site.translation * s.site.translation == 1);   // orbit of +-1
        }
    CHECK(saw_interior);
    CHECK(curve_milnor(res) == milnor_jacobian(h));
    verify_curve_intersections(res);
}

TEST_CASE("tacnode") {
    WPoly h = WPoly::parse("y^2 - x^4");
    CurveResolution res = resolve_curve(h);
    REQUIRE(res.divisors.size() == 1);
    CHECK(res.divisors[0].p == 1);
    CHECK(res.divisors[0].q == 2);
    CHECK(res.divisors[0].m == 4);
    CHECK(curve_milnor(res) == 3);
    CHECK(curve_milnor(res) == milnor_jacobian(h));
    verify_curve_intersections(res);
}

TEST_CASE("weight scripts") {
    WPoly cusp = WPoly::parse("x^3 + y^2");
    CurveResolution scripted = resolve_curve(cusp, WeightStrategy::from_script({{2, 3}}));
    CHECK(scripted.divisors.size() == 1);
    CHECK(to_cyclotomic(curve_charpoly(scripted)) ==
          to_cyclotomic(curve_charpoly(resolve_curve(cusp))));
    CHECK_THROWS_AS(resolve_curve(cusp, WeightStrategy::from_script({})), ScopeError);
}

TEST_CASE("classical strategy reproduces the multiplicity chain") {
    CurveResolution res = resolve_curve(WPoly::parse("x^3 + y^2"), WeightStrategy::classical());
    REQUIRE(res.divisors.size() == 3);
    CHECK(res.divisors[0].m == 2);
    CHECK(res.divisors[1].m == 3);
    CHECK(res.divisors[2].m == 6);
    CHECK(res.divisors[0].self_intersection == -3);
    CHECK(res.divisors[1].self_intersection == -2);
    CHECK(res.divisors[2].self_intersection == -1);
    CHECK(expand(curve_charpoly(res)) == PolyZ{Int(1), Int(-1), Int(1)});
    verify_curve_intersections(res);
}

TEST_CASE("auto-mode complexity strictly decreases along chains") {
    for (const char* text : {"x^3 + y^2", "x^5 + x^2*y^2 + y^6",
                             "y^4 - 2*x^3*y^2 + x^6 + x^7*y", "x^4 + y^3", "x^2*y + y^4"}) {
        CurveResolution res = resolve_curve(WPoly::parse(text));
        for (std::size_t i = 0; i < res.steps.size(); ++i) {
            const auto& st = res.steps[i];
            if (st.site.parent_step < 0) continue;
            const auto& parent = res.steps[st.site.parent_step];
            long po = parent.site.germ.order(), co = st.site.germ.order();
            bool lex_smaller = co < po || (co == po && st.nu < parent.nu);
            CHECK(lex_smaller);
        }
    }
}

TEST_CASE("non-rational interior center is a scope error") {
    // (y^2 - 2x^2)^2 + x^5: tangential points at y = +-sqrt(2)
    WPoly h = WPoly::parse("y^4 - 4*x^2*y^2 + 4*x^4 + x^5");
    CHECK_THROWS_AS(resolve_curve(h), ScopeError);
}

TEST_CASE("exports") {
    CurveResolution res = resolve_curve(WPoly::parse("x^3 + y^2"));
    std::string dot = dot_graph(res, true);
    CHECK(dot.find("E0") != std::string::npos);
    CHECK(dot.find("nu=6") != std::string::npos);
    std::string js = json_export(res);
    CHECK(js.find("\"divisors\"") != std::string::npos);
}
