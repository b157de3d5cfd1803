#include "doctest.h"

#include "qres/errors.hpp"
#include "qres/oracles.hpp"
#include "qres/pipeline.hpp"

using namespace qres;

TEST_CASE("detect_mk") {
    CHECK(detect_mk(WPoly::parse("y^2*z - x^3 + z^4")) == std::pair<long, long>{3, 1});
    CHECK(detect_mk(WPoly::parse("y^2*z - x^3 + z^5")) == std::pair<long, long>{3, 2});
    CHECK_THROWS_AS(detect_mk(WPoly::parse("x + y + z")), std::domain_error);
    CHECK_THROWS_AS(detect_mk(WPoly::parse("x^2*y - z^3")), std::domain_error);
}

TEST_CASE("sing_points") {
    SUBCASE("cuspidal cubic") {
        auto pts = sing_points(WPoly::parse("y^2*z - x^3"));
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].label == "[0:0:1]");
        CHECK(pts[0].germ == WPoly::parse("y^2 - x^3"));
    }
    SUBCASE("smooth conic") {
        CHECK(sing_points(WPoly::parse("x^2 + y^2 - z^2")).empty());
    }
    SUBCASE("node away from the origin") {
        // nodal cubic shifted: singular point of y^2 z = x^3 + x^2 z is [0:0:1];
        // move it to [1:1:1] by substituting x -> x - z, y -> y - z
        WPoly f = WPoly::parse("y^2*z - x^3 - x^2*z");
        WPoly shifted = f.monomial_substitute(
            {Expo{1, 0, 0}, Expo{0, 1, 0}, Expo{0, 0, 1}});
        // direct check on the unshifted curve
        auto pts = sing_points(f);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].label == "[0:0:1]");
        CHECK(pts[0].germ.order() == 2);
        CHECK(milnor_jacobian(pts[0].germ) == 1);
    }
    SUBCASE("two singular points") {
        // two conics tangent at two rational points: (yz - x^2)(yz + x^2)
        auto pts = sing_points(WPoly::parse("y^2*z^2 - x^4"));
        REQUIRE(pts.size() == 2);
        CHECK(pts[0].label == "[0:0:1]");
        CHECK(pts[1].label == "[0:1:0]");
        for (auto& p : pts) CHECK(milnor_jacobian(p.germ) == 3);
    }
    SUBCASE("node moved to [1:1:1]") {
        // substitute x -> x - z, y -> y - z in the nodal cubic so the node
        // sits at [1:1:1]
        WPoly f = WPoly::parse("y^2*z - x^3 - x^2*z");
        WPoly xs = WPoly::variable(0) - WPoly::variable(2);
        WPoly ys = WPoly::variable(1) - WPoly::variable(2);
        WPoly shifted;
        for (auto& [e, c] : f.terms())
            shifted += c * xs.pow(e[0]) * ys.pow(e[1]) * WPoly::variable(2).pow(e[2]);
        auto pts = sing_points(shifted);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].label == "[1:1:1]");
        CHECK(pts[0].germ.order() == 2);
        CHECK(milnor_jacobian(pts[0].germ) == 1);
    }

    SUBCASE("irrational singular points are a scope error") {
        // three lines z (y^2 - 2x^2) with crossings at [1:+-sqrt(2):0]
        CHECK_THROWS_AS(sing_points(WPoly::parse("y^2*z - 2*x^2*z")), ScopeError);
    }
}

TEST_CASE("check_condition") {
    WPoly f = WPoly::parse("y^2*z - x^3 + z^4");
    auto pts = sing_points(WPoly::parse("y^2*z - x^3"));
    CHECK(check_condition(f, 3, 1, pts));
    WPoly bad = WPoly::parse("y^2*z - x^3 + x^4");
    std::vector<std::string> offending;
    CHECK(!check_condition(bad, 3, 1, pts, &offending));
    REQUIRE(offending.size() == 1);
    CHECK(offending[0] == "[0:0:1]");
    CHECK(check_condition(f, 3, 1, {}));
}

TEST_CASE("full curve run") {
    JobConfig job;
    job.mode = JobConfig::Mode::Curve;
    job.input = WPoly::parse("x^3 + y^2");
    job.verify = true;
    ResultDocument doc = run(job);
    CHECK(doc.mu == 2);
    CHECK(doc.delta_expanded == PolyZ{Int(1), Int(-1), Int(1)});
    CHECK(doc.verified);
    CHECK(doc.to_json().find("\"mu\": \"2\"") != std::string::npos);
}

TEST_CASE("full superisolated run") {
    JobConfig job;
    job.mode = JobConfig::Mode::Surface;
    job.input = WPoly::parse("y^2*z - x^3 + z^4");
    job.verify = true;
    ResultDocument doc = run(job);
    CHECK(doc.m == 3);
    CHECK(doc.k == 1);
    CHECK(doc.mu == 10);
    PolyZ expected = polyz_mul(PolyZ{Int(1), Int(1), Int(1)},
                               PolyZ{Int(1), Int(0), Int(0), Int(0), Int(-1), Int(0), Int(0),
                                     Int(0), Int(1)});
    CHECK(doc.delta_expanded == expected);
    CHECK(doc.verified);
}

TEST_CASE("full Yomdin-Le run") {
    JobConfig job;
    job.mode = JobConfig::Mode::Surface;
    job.input = WPoly::parse("y^2*z - x^3 + z^5");
    job.verify = true;
    ResultDocument doc = run(job);
    CHECK(doc.m == 3);
    CHECK(doc.k == 2);
    CHECK(doc.mu == 12);
    PolyZ expected = polyz_mul(PolyZ{Int(1), Int(1), Int(1)},
                               PolyZ{Int(1), Int(0), Int(0), Int(0), Int(0), Int(1), Int(0),
                                     Int(0), Int(0), Int(0), Int(1)});
    CHECK(doc.delta_expanded == expected);
}

TEST_CASE("condition violation is rejected") {
    JobConfig job;
    job.mode = JobConfig::Mode::Surface;
    job.input = WPoly::parse("y^2*z - x^3 + x^4");
    CHECK_THROWS_AS(run(job), ScopeError);
}

TEST_CASE("germ mode bypasses point location") {
    JobConfig job;
    job.mode = JobConfig::Mode::Surface;
    job.m = 6;
    job.k = 1;
    for (int i = 0; i < 6; ++i)
        job.germs.push_back({WPoly::parse("x^3 + y^2"), Int(2), "cusp " + std::to_string(i + 1)});
    ResultDocument doc = run(job);
    // six-cusp sextic: chi = 36 - 18 + 3 - 12 = 9, mu = 125 + 12
    CHECK(doc.mu == 137);
    CHECK(doc.delta.factors().at(6) == 9);

    job.germs[0].mu = Int(3);
    CHECK_THROWS_AS(run(job), VerificationError);
}

TEST_CASE("explicit singular point hints") {
    JobConfig job;
    job.mode = JobConfig::Mode::Surface;
    job.input = WPoly::parse("y^2*z - x^3 + z^4");
    job.sing_hints.push_back({Rat(0), Rat(0), Rat(1)});
    ResultDocument doc = run(job);
    CHECK(doc.mu == 10);

    job.sing_hints[0] = {Rat(1), Rat(1), Rat(1)};
    CHECK_THROWS_AS(run(job), ScopeError);
}

TEST_CASE("verification is read-only") {
    JobConfig job;
    job.mode = JobConfig::Mode::Surface;
    job.input = WPoly::parse("y^2*z - x^3 + z^5");
    ResultDocument plain = run(job);
    job.verify = true;
    ResultDocument verified = run(job);
    CHECK(plain.delta == verified.delta);
    CHECK(plain.mu == verified.mu);
    CHECK(plain.delta_expanded == verified.delta_expanded);
    CHECK(plain.surface_json == verified.surface_json);
}

TEST_CASE("result document rendering") {
    JobConfig job;
    job.mode = JobConfig::Mode::Curve;
    job.input = WPoly::parse("x^3 + y^2");
    ResultDocument doc = run(job);
    CHECK(doc.factored().find("t^6-1") != std::string::npos);
    CHECK(doc.expanded() == "[1, -1, 1]");
    CHECK(doc.text_summary().find("mu = 2") != std::string::npos);
}
