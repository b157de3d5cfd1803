#include "doctest.h"

#include "qres/intersection.hpp"

#include <random>

using namespace qres;

TEST_CASE("pullback coefficient") {
    CHECK(pullback_coeff(6, 1) == 6);
    CHECK(pullback_coeff(0, 3) == 0);
    CHECK(pullback_coeff(5, 2) == Rat(5, 2));
}

TEST_CASE("exceptional self-intersection") {
    CHECK(exc_self_int(1, 2, 3, 1) == Rat(-1, 6));
    CHECK(exc_self_int(1, 1, 1, 1) == -1);
    // step-2 shape: blow-up of X(p1;...) with weights (pa,qa), invariant d
    Int p1 = 5, pa = 2, qa = 3, d = 1;
    CHECK(exc_self_int(p1, pa, qa, d) == Rat(-d * d, p1 * pa * qa));
}

TEST_CASE("bezout on quotient weighted projective planes") {
    CHECK(bezout_wp2(6, 6, 1, 2, 3, 6, 1) == 1);
    CHECK(bezout_wp2(4, 4, 1, 1, 1, 1, 1) == 16);
    // degree-nu sections of E_a = P^2_(pa,qa,nu)(p1;...) self-intersect in
    // nu d / (p1 pa qa)
    Int nu = 4, d = 2, p1 = 6, pa = 1, qa = 5;
    CHECK(bezout_wp2(nu, nu, p1, pa, qa, nu, d) == Rat(nu * d, p1 * pa * qa));
}

TEST_CASE("bezout_e minors") {
    // kernel of the projectivized action on P^2_(p,q,r)
    CHECK(bezout_e(1, 0, 0, 0, 2, 3, 6) == 1);
    CHECK(bezout_e(2, 1, 1, 1, 1, 1, 1) == 2);
    QuotientType t = QuotientType::cyclic(2, {Int(1), Int(1), Int(1)});
    CHECK(wp2_effective_order(t, 1, 1, 1) == Int(2) / bezout_e(2, 1, 1, 1, 1, 1, 1));
    // random agreement between the minor formula and the counting route
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> ddist(1, 9), wdist(0, 8), pdist(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        long d = ddist(rng), a = wdist(rng), b = wdist(rng), c = wdist(rng);
        long p = pdist(rng), q = pdist(rng), r = pdist(rng);
        if (gcd(gcd(Int(p), Int(q)), Int(r)) != 1) continue;
        QuotientType one_row = d == 1 ? QuotientType::trivial(3)
                                      : QuotientType::cyclic(d, {Int(a), Int(b), Int(c)});
        Int e = bezout_e(d, a, b, c, p, q, r);
        CHECK(wp2_effective_order(one_row, p, q, r) == Int(d) / e);
    }
}

TEST_CASE("smooth local intersection numbers") {
    CHECK(smooth_local_intersection(WPoly::parse("y"), WPoly::parse("y - x^2")) == 2);
    CHECK(smooth_local_intersection(WPoly::parse("x"), WPoly::parse("y")) == 1);
    CHECK(smooth_local_intersection(WPoly::parse("x^3 + y^2"), WPoly::parse("x^2 + y^3")) == 4);
    CHECK(smooth_local_intersection(WPoly::parse("y^2"), WPoly::parse("x^3")) == 6);
    // germs meeting away from the origin do not contribute
    CHECK(smooth_local_intersection(WPoly::parse("1 + x"), WPoly::parse("y")) == 0);
    // Milnor number of the cusp via the Jacobian pair
    CHECK(smooth_local_intersection(WPoly::parse("3*x^2"), WPoly::parse("2*y")) == 2);
    CHECK_THROWS_AS(smooth_local_intersection(WPoly::parse("x*y"), WPoly::parse("x")),
                    std::domain_error);
}

TEST_CASE("local intersection on quotients") {
    // z=0 against z+x^a on X(q1; p1, nu1), written in coordinates (x,y)
    QuotientType t = QuotientType::cyclic(3, {Int(2), Int(6)});
    CHECK(local_int(t, WPoly::parse("y"), WPoly::parse("y + x^5")) == Rat(5, 3));
    CHECK(local_int(QuotientType::trivial(2), WPoly::parse("x"), WPoly::parse("y")) == 1);
    CHECK(local_int(QuotientType::trivial(2), WPoly::parse("y"), WPoly::parse("y - x^2")) == 2);
}

TEST_CASE("projection formula on randomized instances") {
    std::mt19937 rng(43);
    std::uniform_int_distribution<long> ddist(1, 12), wdist(1, 9), nudist(0, 20);
    int done = 0;
    while (done < 100) {
        long d = ddist(rng), a = wdist(rng) % d, b = wdist(rng) % d;
        if (d > 1 && (gcd(Int(d), Int(a)) != 1 || gcd(Int(d), Int(b)) != 1)) continue;
        long p = wdist(rng), q = wdist(rng);
        if (gcd(Int(p), Int(q)) != 1) continue;
        ++done;
        Int e = gcd(Int(d), Int(p) * b - Int(q) * a);
        Int nu = nudist(rng);
        // E . pi^*(C) = E . C_hat + (nu/e) E^2 = 0
        Rat lhs = exc_dot_strict(nu, d, p, q, e) + pullback_coeff(nu, e) * exc_self_int(d, p, q, e);
        CHECK(lhs == 0);
    }
}
