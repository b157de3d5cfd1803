#include "doctest.h"

#include "qres/charproduct.hpp"

#include <random>

using namespace qres;

namespace {

PolyZ poly_of(std::initializer_list<long> cs) {
    PolyZ p;
    for (long c : cs) p.push_back(Int(c));
    return p;
}

} // namespace

TEST_CASE("acampo assembly") {
    SUBCASE("cusp strata") {
        CharProduct cp = acampo({{Int(6), Int(-1)}, {Int(3), Int(1)}, {Int(2), Int(1)}}, 1);
        CHECK(cp.factors().at(6) == 1);
        CHECK(cp.factors().at(1) == 1);
        CHECK(cp.factors().at(3) == -1);
        CHECK(cp.factors().at(2) == -1);
        CHECK(expand(cp) == poly_of({1, -1, 1}));
        CHECK(milnor_number(cp) == 2);
    }
    SUBCASE("superisolated cusp strata, n = 2") {
        CharProduct cp = acampo({{Int(3), Int(1)},
                                 {Int(4), Int(1)},
                                 {Int(24), Int(1)},
                                 {Int(12), Int(-1)},
                                 {Int(8), Int(-1)}},
                                2);
        // (t^2+t+1)(t^8-t^4+1)
        PolyZ expected = polyz_mul(poly_of({1, 1, 1}), poly_of({1, 0, 0, 0, -1, 0, 0, 0, 1}));
        CHECK(expand(cp) == expected);
        CHECK(milnor_number(cp) == 10);
    }
    SUBCASE("empty strata") {
        CharProduct cp = acampo({}, 1);
        CHECK(cp == CharProduct::factor(1, 1));
    }
}

TEST_CASE("substitute_power") {
    CharProduct cusp = acampo({{Int(6), Int(-1)}, {Int(3), Int(1)}, {Int(2), Int(1)}}, 1);
    CharProduct s4 = cusp.substitute_power(4);
    CHECK(s4.factors().at(24) == 1);
    CHECK(s4.factors().at(4) == 1);
    CHECK(s4.factors().at(12) == -1);
    CHECK(s4.factors().at(8) == -1);
    CHECK(cusp.substitute_power(1) == cusp);
    CHECK(CharProduct::one().substitute_power(5) == CharProduct::one());
}

TEST_CASE("delta_k operator") {
    CharProduct cusp = acampo({{Int(6), Int(-1)}, {Int(3), Int(1)}, {Int(2), Int(1)}}, 1);
    SUBCASE("k = 2 collapses the cusp to t^2+t+1") {
        CharProduct d2 = cusp.delta_k(2);
        CHECK(d2.factors().size() == 2);
        CHECK(d2.factors().at(3) == 1);
        CHECK(d2.factors().at(1) == -1);
        CHECK(expand(d2) == poly_of({1, 1, 1}));
    }
    SUBCASE("k = 1 is the identity") { CHECK(cusp.delta_k(1) == cusp); }
    SUBCASE("single factor t^k - 1") {
        CharProduct single = CharProduct::factor(4, 1);
        CharProduct dk = single.delta_k(4);
        CHECK(dk == CharProduct::factor(1, 4));
    }
    SUBCASE("composition when gcds are multiplicative") {
        std::mt19937 rng(23);
        std::uniform_int_distribution<long> mdist(1, 30), adist(-3, 3), kdist(2, 6);
        int done = 0;
        while (done < 40) {
            CharProduct cp;
            for (int i = 0; i < 4; ++i) cp.multiply_factor(mdist(rng), adist(rng));
            long k = kdist(rng), j = kdist(rng);
            bool multiplicative = true;
            for (auto& [m, a] : cp.factors())
                if (gcd(m, Int(k) * j) != gcd(m, Int(k)) * gcd(m, Int(j))) multiplicative = false;
            if (!multiplicative) continue;
            ++done;
            CHECK(cp.delta_k(j).delta_k(k) == cp.delta_k(Int(k) * j));
        }
    }
}

TEST_CASE("cyclotomic vectors") {
    CharProduct cusp = acampo({{Int(6), Int(-1)}, {Int(3), Int(1)}, {Int(2), Int(1)}}, 1);
    auto v = to_cyclotomic(cusp);
    REQUIRE(v.c.size() == 1);
    CHECK(v.c.at(6) == 1);
    CHECK(v.degree() == 2);
    CHECK(v.is_polynomial());

    CHECK(to_cyclotomic(CharProduct::factor(1, 1)).c.at(1) == 1);

    CharProduct half = CharProduct::factor(2, 1) * CharProduct::factor(1, -1);
    auto vh = to_cyclotomic(half);
    REQUIRE(vh.c.size() == 1);
    CHECK(vh.c.at(2) == 1);
    CHECK(expand(half) == poly_of({1, 1}));

    CHECK_THROWS_AS(expand(CharProduct::factor(2, -1)), std::domain_error);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == poly_of({-1, 1}));
    CHECK(cyclotomic_poly(2) == poly_of({1, 1}));
    CHECK(cyclotomic_poly(6) == poly_of({1, -1, 1}));
    CHECK(cyclotomic_poly(12) == poly_of({1, 0, -1, 0, 1}));
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(1) == 1);
}

TEST_CASE("closed formulas") {
    CharProduct cusp = acampo({{Int(6), Int(-1)}, {Int(3), Int(1)}, {Int(2), Int(1)}}, 1);
    SUBCASE("superisolated cusp cubic") {
        CharProduct delta = closed_sis(Int(1), 3, {cusp});
        PolyZ expected = polyz_mul(poly_of({1, 1, 1}), poly_of({1, 0, 0, 0, -1, 0, 0, 0, 1}));
        CHECK(expand(delta) == expected);
        CHECK(milnor_number(delta) == 10);
    }
    SUBCASE("Yomdin-Le cusp cubic, k = 2") {
        CharProduct delta = closed_yls(Int(1), 3, 2, {cusp});
        PolyZ expected = polyz_mul(poly_of({1, 1, 1}),
                                   poly_of({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}));
        CHECK(expand(delta) == expected);
        CHECK(milnor_number(delta) == 12);
    }
    SUBCASE("no singular points") {
        CharProduct delta = closed_sis(Int(3), 2, {});
        CHECK(delta == CharProduct::factor(2, 3) * CharProduct::factor(1, -1));
    }
}

TEST_CASE("degree equals expanded degree for polynomials") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> mdist(1, 12), adist(1, 3);
    for (int trial = 0; trial < 30; ++trial) {
        CharProduct cp;
        for (int i = 0; i < 3; ++i) cp.multiply_factor(mdist(rng), adist(rng));
        PolyZ p = expand(cp);
        CHECK(Int((long)p.size() - 1) == cp.degree());
        CHECK(to_cyclotomic(cp).degree() == cp.degree());
    }
}
