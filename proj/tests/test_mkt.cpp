#include "doctest.h"

#include <random>

#include "quadtwist/mkt.hpp"

using namespace quadtwist;

TEST_CASE("place classification separates split primes") {
    CurveQ E = CurveQ::short_form(-1, 0);
    auto pc = classify_places(E, 17);
    // bad primes of E: 2; ramified in Q(sqrt 17): 17
    bool has2 = false, has17 = false;
    for (const Int& p : pc.S) {
        if (p == 2) has2 = true;
        if (p == 17) has17 = true;
    }
    CHECK(has2);
    CHECK(has17);
    for (const auto& cp : pc.S0) {
        CHECK(cp.split != SplitType::split);
        if (cp.p == 2) CHECK(cp.cls == PlaceClass::additive);
        if (cp.p == 17) CHECK(cp.cls == PlaceClass::good);
    }
}

TEST_CASE("archimedean contribution") {
    CurveQ E = CurveQ::short_form(-1, 0);   // disc 64 > 0: two real components
    CHECK(delta_infinity(E, -1) == 1);
    CHECK(delta_infinity(E, -7) == 1);
    CHECK(delta_infinity(E, 5) == 0);
    CurveQ F = CurveQ::short_form(1, 1);    // disc < 0: one component
    CHECK(delta_infinity(F, -1) == 0);
    CHECK(delta_infinity(F, 3) == 0);
}

TEST_CASE("closed form for the congruent family") {
    // representatives of each residue class, both signs
    CHECK(mkt_congruent_closed_form(17) == 2);   // n > 0, n = 1 (8)
    CHECK(mkt_congruent_closed_form(33) == 4);   // two odd primes
    CHECK(mkt_congruent_closed_form(5) == 3);    // n > 0, n = 5 (8)
    CHECK(mkt_congruent_closed_form(7) == 3);    // n > 0, n = 7 (8)
    CHECK(mkt_congruent_closed_form(6) == 5);    // n > 0, n = 6 (8)
    CHECK(mkt_congruent_closed_form(2) == 2);    // n > 0, n = 2 (8)
    CHECK(mkt_congruent_closed_form(3) == 4);    // n > 0, n = 3 (8)
    CHECK(mkt_congruent_closed_form(-7) == 3);   // n < 0, n = 1 (8)
    CHECK(mkt_congruent_closed_form(-3) == 4);   // n < 0, n = 5 (8)
    CHECK(mkt_congruent_closed_form(-1) == 2);   // -1 = 7 (8)
    CHECK(mkt_congruent_closed_form(-2) == 4);   // -2 = 6 (8)
    CHECK(mkt_congruent_closed_form(-10) == 6);
    CHECK(mkt_congruent_closed_form(-6) == 5);   // -6 = 2 (8)
    CHECK(mkt_congruent_closed_form(-5) == 5);   // -5 = 3 (8)
    CHECK_THROWS_AS(mkt_congruent_closed_form(0), input_error);
    CHECK_THROWS_AS(mkt_congruent_closed_form(12), input_error);
}

TEST_CASE("product formula agrees with the closed form, |n| <= 200") {
    CurveQ E = CurveQ::short_form(-1, 0);
    for (long n = -200; n <= 200; ++n) {
        if (n == 0 || n == 1 || !is_squarefree(n)) continue;
        MktBreakdown b = mkt_index(E, n);
        INFO("n=", n);
        CHECK(b.delta == mkt_congruent_closed_form(n));
        CHECK(b.delta == b.delta_inf + b.delta_f);
        long sum = 0;
        for (const auto& t : b.terms) sum += t.term;
        CHECK(sum == b.delta_f);
    }
}

TEST_CASE("both index decompositions agree on the congruent family") {
    CurveQ E = CurveQ::short_form(-1, 0);
    for (long n = -200; n <= 200; ++n) {
        if (n == 0 || n == 1 || !is_squarefree(n)) continue;
        KramerBreakdown k = delta_kramer(E, n);
        INFO("n=", n);
        CHECK(k.delta == mkt_index(E, n).delta);
        CHECK(k.delta == k.delta_inf + k.delta_g + k.delta_m + k.delta_a);
    }
}

TEST_CASE("both index decompositions agree on random curves") {
    std::mt19937_64 rng(97);
    int done = 0;
    while (done < 50) {
        long a = static_cast<long>(rng() % 21) - 10;
        long b = static_cast<long>(rng() % 21) - 10;
        CurveQ E = CurveQ::short_form(a, b);
        if (E.discriminant() == 0) continue;
        long D = static_cast<long>(rng() % 99) - 49;
        if (D == 0 || D == 1 || !is_squarefree(D)) continue;
        MktBreakdown m = mkt_index(E, D);
        KramerBreakdown k = delta_kramer(E, D);
        INFO("a=", a, " b=", b, " D=", D);
        CHECK(m.delta == k.delta);
        CHECK(m.delta_inf == k.delta_inf);
        ++done;
    }
}

TEST_CASE("input validation") {
    CurveQ E = CurveQ::short_form(-1, 0);
    CHECK_THROWS_AS(mkt_index(E, 0), input_error);
    CHECK_THROWS_AS(mkt_index(E, 8), input_error);
    CurveQ longform{Rat(1), Rat(0), Rat(0), Rat(-1), Rat(0)};
    CHECK_THROWS_AS(mkt_index(longform, 5), input_error);
}
