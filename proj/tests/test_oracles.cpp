#include "doctest.h"

#include "qres/curve.hpp"
#include "qres/oracles.hpp"

using namespace qres;

TEST_CASE("jacobian milnor numbers") {
    CHECK(milnor_jacobian(WPoly::parse("x^3 + y^2")) == 2);
    CHECK(milnor_jacobian(WPoly::parse("x^4 + y^3")) == 6);
    CHECK(milnor_jacobian(WPoly::parse("x^2 - y^2")) == 1);
    CHECK(milnor_jacobian(WPoly::parse("y^2 - x^4")) == 3);
    CHECK(milnor_jacobian(WPoly::parse("x + y^5")) == 0);
    CHECK_THROWS_AS(milnor_jacobian(WPoly::parse("x^2*y^2")), std::domain_error);
}

TEST_CASE("truncation stabilization certificate") {
    for (const char* text : {"x^3 + y^2", "x^5 + y^4", "x^2*y + y^4"}) {
        WPoly h = WPoly::parse(text);
        Int mu = milnor_jacobian(h);
        long bound = std::max<long>(4, h.degree() + 2);
        while (milnor_jacobian_truncated(h, bound) != mu) bound += 2;
        CHECK(milnor_jacobian_truncated(h, bound + 2) == mu);
        CHECK(milnor_jacobian_truncated(h, bound + 4) == mu);
    }
}

TEST_CASE("classical resolution charpoly") {
    CHECK(expand(classical_charpoly(WPoly::parse("x^3 + y^2"))) == PolyZ{Int(1), Int(-1), Int(1)});
    CHECK(classical_charpoly(WPoly::parse("x + y^4")) == CharProduct::one());

    // dual-path agreement on the node, no hand value asserted
    WPoly node = WPoly::parse("x^2 - y^2");
    auto classical = classical_charpoly(node);
    auto weighted = curve_charpoly(resolve_curve(node));
    CHECK(to_cyclotomic(classical) == to_cyclotomic(weighted));
    CHECK(milnor_number(classical) == milnor_jacobian(node));
}

TEST_CASE("dual-oracle agreement for x^2 y + y^4") {
    WPoly h = WPoly::parse("x^2*y + y^4");
    Int mu = milnor_jacobian(h);
    CharProduct classical = classical_charpoly(h);
    CharProduct weighted = curve_charpoly(resolve_curve(h));
    CHECK(to_cyclotomic(classical) == to_cyclotomic(weighted));
    CHECK(milnor_number(classical) == mu);
    CHECK(Int((long)expand(classical).size() - 1) == mu);
}

TEST_CASE("quasihomogeneous formula") {
    CHECK(quasihomog_mu(2, 3) == 2);
    CHECK(quasihomog_mu(3, 4) == 6);
    CHECK(quasihomog_mu(2, 5) == 4);
    CHECK_THROWS_AS(quasihomog_mu(1, 5), std::invalid_argument);
}
