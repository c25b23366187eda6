#include "doctest.h"

#include <set>

#include "quadtwist/predict.hpp"

using namespace quadtwist;

TEST_CASE("order predictions for the congruent family") {
    struct Row { long n; Rat value; bool integral; bool square; };
    for (const Row& r : std::vector<Row>{{17, 1, true, true},
                                         {3, 1, true, true},
                                         {33, 1, true, true},
                                         {73, 1, true, true},
                                         {51, 4, true, true},
                                         {-2, 1, true, true},
                                         {-3, 1, true, true},
                                         {-10, 4, true, true},
                                         {-57, 4, true, true}}) {
        ShaPrediction p = sha_order_en(r.n);
        INFO("n=", r.n);
        CHECK(p.kind == PredictionKind::order_en);
        CHECK(p.value == r.value);
        CHECK(p.integral == r.integral);
        CHECK(p.perfect_square == r.square);
        CHECK_FALSE(p.vacuous);
        CHECK_FALSE(p.has_corrected);
        CHECK(p.delta == mkt_congruent_closed_form(r.n));
        CHECK_FALSE(p.assumptions.empty());
    }
}

TEST_CASE("the two exceptional twists are non-integral and index-corrected") {
    for (long n : {2L, -1L}) {
        ShaPrediction p = sha_order_en(n);
        INFO("n=", n);
        CHECK(p.value == Rat(1, 4));
        CHECK_FALSE(p.integral);
        CHECK_FALSE(p.perfect_square);
        CHECK(p.has_corrected);
        CHECK(p.corrected_value == 1);
        CHECK_FALSE(p.notes.empty());
    }
}

TEST_CASE("vacuous branches report a vanishing hypothesis") {
    // 41 = 1 (8) but a_41 = 0
    ShaPrediction p = sha_order_en(41);
    CHECK(p.vacuous);
    CHECK(p.value == 0);
    CHECK_FALSE(p.notes.empty());
}

TEST_CASE("order prediction rejects inputs outside the two class families") {
    CHECK_THROWS_AS(sha_order_en(5), input_error);    // n > 0 needs 1,2,3 (8)
    CHECK_THROWS_AS(sha_order_en(7), input_error);
    CHECK_THROWS_AS(sha_order_en(-5), input_error);   // n < 0 needs 5,6,7 (8)
    CHECK_THROWS_AS(sha_order_en(0), input_error);
    CHECK_THROWS_AS(sha_order_en(18), input_error);   // not squarefree
}

TEST_CASE("ratio predictions carry the exponent ledger") {
    CurveQ E = CurveQ::short_form(-1, 0);
    ShaPrediction p = sha_ratio(E, 17, 0, 0, 4);
    CHECK(p.kind == PredictionKind::ratio);
    // 2^{0 - 0 - delta} * index^2 with delta = 2
    CHECK(p.value == 4);
    CHECK(p.delta == 2);
    CHECK(p.index == 4);
    ShaPrediction q = sha_ratio(E, -2, 0, 0, 1);
    CHECK(q.value == Rat(1, 16));  // delta = 4
    CHECK_THROWS_AS(sha_ratio(E, 17, 0, 0, 0), input_error);
}

TEST_CASE("order, ratio and theta coefficient close a consistency triangle") {
    CurveQ E = CurveQ::short_form(-1, 0);
    for (long n : {17L, 3L, 33L, 51L, 73L, -2L, -3L, -10L, -11L, -57L, -105L}) {
        ShaPrediction ord = sha_order_en(n);
        ShaPrediction ratio = sha_ratio(E, n, 0, 0, 4);
        BsdAssembly b = bsd_assembly_en(n);
        INFO("n=", n);
        // #Sha(E_n/Q) / ratio = predicted #Sha(E/K)
        CHECK(ord.value * ratio.value == b.sha_en);
        CHECK(b.sha_ek == ord.value);
    }
}

TEST_CASE("rank parity of the twist") {
    for (long n = -500; n <= 500; ++n) {
        if (n == 0 || n == 1 || !is_squarefree(n)) continue;
        Parity p = rank_parity_en(n);
        INFO("n=", n);
        // parity matches the parity of the index exponent
        CHECK((p == Parity::odd) == (mkt_congruent_closed_form(n) % 2 != 0));
        // the conditionally-congruent classes have odd parity
        long r = ((n % 8) + 8) % 8;
        bool odd_class = (n > 0) ? (r == 5 || r == 6 || r == 7) : (r == 1 || r == 2 || r == 3);
        CHECK((p == Parity::odd) == odd_class);
    }
}

TEST_CASE("parity bookkeeping") {
    CHECK(parity_check(2, 1, 1, 0));
    CHECK(parity_check(1, 0, 1, 1));
    CHECK_FALSE(parity_check(2, 1, 1, 1));   // r_K - (r_DF - r_F) must be even vs delta
    CHECK_THROWS_AS(parity_check(3, 1, 1, 0), input_error);  // r_K != r_F + r_DF
}

TEST_CASE("prime families with controlled theta valuation") {
    // primes p = 3 (8): v_2(a_p) = 1
    for (long p : {3L, 11L, 19L, 43L, 59L, 83L}) {
        ExampleGReport r = example_g_check(p, 1);
        INFO("p=", p);
        CHECK(r.v2 == 1);
        CHECK(r.match);
        CHECK(r.sha_prediction == Rat(r.a_n) * r.a_n / 4);
    }
    // two-factor products p1 p2 with p1 = 3 (8), p2 = 1 (8)
    ExampleGReport r = example_g_check(Int(3) * 17, 2);
    CHECK(r.v2 == 2);
    CHECK(r.match);
    CHECK_THROWS_AS(example_g_check(5, 1), input_error);        // 5 = 5 (8)
    CHECK_THROWS_AS(example_g_check(Int(3) * 11, 2), input_error);  // two factors = 3 (8)
    CHECK_THROWS_AS(example_g_check(9, 1), input_error);        // not squarefree
}

TEST_CASE("Heegner discriminant list and order predictions") {
    const auto& discs = heegner_trivial_sha_discs();
    CHECK(discs.size() == 23);
    std::set<long> seen(discs.begin(), discs.end());
    CHECK(seen.size() == 23);
    CurveQ e37{Rat(0), Rat(0), Rat(1), Rat(-1), Rat(0)};
    for (long D : discs) {
        CHECK(D < 0);
        Int d = squarefree_part(D);
        ShaPrediction p = heegner_sha(e37, d, true, 2);
        INFO("D=", D);
        CHECK(p.kind == PredictionKind::heegner_order);
        CHECK(p.value == 1);  // delta_g = 0 throughout the list
        CHECK(p.integral);
        CHECK(p.perfect_square);
    }
    // 37 is ramified in Q(sqrt -37): Heegner hypothesis fails
    CHECK_THROWS_AS(heegner_sha(e37, -37, true, 2), input_error);
    CHECK_THROWS_AS(heegner_sha(e37, 5, true, 2), input_error);  // D must be negative
}

TEST_CASE("Heegner ratio predictions for other curves") {
    CurveQ e11{Rat(0), Rat(-1), Rat(1), Rat(-10), Rat(-20)};
    ShaPrediction p = heegner_sha(e11, -7, false, 1);
    CHECK(p.kind == PredictionKind::heegner_ratio);
    CHECK(p.value == 1);
    ShaPrediction q = heegner_sha(e11, -7, true, 1);
    CHECK(q.value == Rat(1, 4));
}

TEST_CASE("norm index from the archimedean obstruction") {
    CurveQ e37s = CurveQ::short_form(-1, Rat(1, 4));
    // generator (0, 1/2) lies on the bounded real component
    NormIndexReport r = heegner_norm_index(e37s, 0, Rat(1, 2), -7);
    CHECK(r.decided);
    CHECK(r.index == 2);
    CHECK(r.torsion_trivial);
    CHECK(r.two_components);
    CHECK(r.bounded_component);
    // its double (1, 1/2) lies on the unbounded component: inconclusive
    NormIndexReport r2 = heegner_norm_index(e37s, 1, Rat(1, 2), -7);
    CHECK_FALSE(r2.decided);
    CHECK(r2.index == 1);
    CHECK_FALSE(r2.bounded_component);
    // nontrivial rational torsion blocks the argument
    NormIndexReport r3 = heegner_norm_index(CurveQ::short_form(-1, 0), 0, 0, -7);
    CHECK_FALSE(r3.decided);
    CHECK_FALSE(r3.torsion_trivial);
    CHECK_THROWS_AS(heegner_norm_index(e37s, 5, 5, -7), input_error);  // not on the curve
    CHECK_THROWS_AS(heegner_norm_index(e37s, 0, Rat(1, 2), 7), input_error);  // D > 0
}

TEST_CASE("central value assembly over Q and K") {
    for (long n : {17L, 3L, 33L, 51L, 73L, 10L, -2L, -3L, -10L, -11L, -57L, -105L}) {
        BsdAssembly b = bsd_assembly_en(n);
        INFO("n=", n);
        CHECK_FALSE(b.vacuous);
        CHECK(b.equal_q);
        CHECK(b.equal_k);
        CHECK_FALSE(b.has_corrected_k);
        CHECK(b.torsion_k == 4);
        CHECK(b.lhs_q == b.rhs_q);
        CHECK(b.lhs_k == b.rhs_k);
    }
    // the exceptional twists have K-torsion of order 8 and only the
    // index-corrected identity holds
    for (long n : {2L, -1L}) {
        BsdAssembly b = bsd_assembly_en(n);
        INFO("n=", n);
        CHECK(b.equal_q);
        CHECK_FALSE(b.equal_k);
        CHECK(b.has_corrected_k);
        CHECK(b.equal_k_corrected);
        CHECK(b.torsion_k == 8);
    }
    // vanishing coefficient: both sides zero
    BsdAssembly v = bsd_assembly_en(41);
    CHECK(v.vacuous);
    CHECK(v.equal_q);
    CHECK(v.lhs_q == 0);
}
