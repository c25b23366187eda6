#include "doctest.h"

#include <random>

#include "quadtwist/localdata.hpp"

using namespace quadtwist;

TEST_CASE("splitting type matches the Kronecker symbol") {
    std::mt19937_64 rng(83);
    for (int i = 0; i < 400; ++i) {
        long D = static_cast<long>(rng() % 400) - 200;
        if (D == 0 || D == 1 || !is_squarefree(D)) continue;
        long primes[] = {2, 3, 5, 7, 11, 13, 37};
        long p = primes[rng() % 7];
        SplitType st = splitting_type(D, p);
        long fund = ((D % 4 + 4) % 4 == 1) ? D : 4 * D;  // fundamental discriminant
        int k = kronecker_symbol(fund, p);
        INFO("D=", D, " p=", p);
        if (k == 1) CHECK(st == SplitType::split);
        if (k == -1) CHECK(st == SplitType::inert);
        if (k == 0) CHECK(st == SplitType::ramified);
    }
}

TEST_CASE("classification of the completion at 2") {
    // odd n: depends on n mod 8; even n: on n mod 16
    CHECK(classify_q2_extension(17) == 1);
    CHECK(classify_q2_extension(33) == 1);
    CHECK(classify_q2_extension(97) == 1);
    CHECK(classify_q2_extension(-7) == 1);
    CHECK(classify_q2_extension(5) == -3);
    CHECK(classify_q2_extension(-3) == -3);
    CHECK(classify_q2_extension(3) == 3);
    CHECK(classify_q2_extension(-5) == 3);
    CHECK(classify_q2_extension(7) == -1);
    CHECK(classify_q2_extension(-1) == -1);
    CHECK(classify_q2_extension(2) == 2);
    CHECK(classify_q2_extension(-2) == -2);
    CHECK(classify_q2_extension(10) == -6);
    CHECK(classify_q2_extension(-6) == -6);
    CHECK(classify_q2_extension(6) == 6);
    CHECK(classify_q2_extension(14) == -2);
    // class depends only on the residue: sampled sweep
    for (long n = -300; n <= 300; ++n) {
        if (n == 0 || n == 1 || !is_squarefree(n)) continue;
        Int cls = classify_q2_extension(n);
        long r = ((n % 16) + 16) % 16;
        INFO("n=", n, " r=", r);
        if (n % 2 != 0) {
            long r8 = r % 8;
            Int want = (r8 == 1) ? 1 : (r8 == 5 ? -3 : (r8 == 3 ? 3 : -1));
            CHECK(cls == want);
        } else {
            Int want = (r == 2) ? 2 : (r == 14 ? -2 : (r == 10 ? -6 : 6));
            CHECK(cls == want);
        }
    }
}

TEST_CASE("local field descriptors: ramification, valuation, residue") {
    LocalFieldDesc q2 = LocalFieldDesc::base(2);
    CHECK(q2.e() == 1);
    CHECK(q2.f() == 1);
    CHECK(q2.disc_exponent() == 0);
    CHECK(q2.valuation(q2.embed(Rat(12))) == 2);
    CHECK(q2.valuation(q2.embed(Rat(3, 8))) == -3);

    // unramified quadratic at 2: Q_2(sqrt -3)
    LocalFieldDesc u = LocalFieldDesc::completion(2, -3);
    CHECK(u.kind == LocalFieldDesc::Kind::unramified_quad);
    CHECK(u.e() == 1);
    CHECK(u.f() == 2);
    CHECK(u.disc_exponent() == 0);
    CHECK(u.residue_field().q() == 4);
    CHECK(u.valuation(u.embed(Rat(2))) == 1);

    // ramified at 2: Q_2(sqrt 2)
    LocalFieldDesc r = LocalFieldDesc::completion(2, 2);
    CHECK(r.kind == LocalFieldDesc::Kind::ramified_quad);
    CHECK(r.e() == 2);
    CHECK(r.valuation(r.embed(Rat(2))) == 2);
    CHECK(r.valuation(r.uniformizer()) == 1);
    CHECK(r.disc_exponent() >= 2);

    // split prime collapses to the base field
    LocalFieldDesc s = LocalFieldDesc::completion(7, 2);  // 2 is a QR mod 7
    CHECK(s.kind == LocalFieldDesc::Kind::base);

    // odd ramified: Q_5(sqrt 5)
    LocalFieldDesc r5 = LocalFieldDesc::completion(5, 5);
    CHECK(r5.kind == LocalFieldDesc::Kind::ramified_quad);
    CHECK(r5.disc_exponent() == 1);
    CHECK(r5.valuation(r5.embed(Rat(5))) == 2);

    // valuation is additive and residue/lift round-trips
    std::mt19937_64 rng(89);
    for (const LocalFieldDesc& F : {q2, u, r, r5, LocalFieldDesc::base(3),
                                    LocalFieldDesc::completion(3, -1)}) {
        for (int i = 0; i < 60; ++i) {
            Rat a(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
            Rat b(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1);
            a.canonicalize();
            b.canonicalize();
            QuadElem x = F.embed(a), y = F.embed(b);
            if (x.is_zero() || y.is_zero()) continue;
            CHECK(F.valuation(x * y) == F.valuation(x) + F.valuation(y));
        }
        FqField k = F.residue_field();
        for (long c = 0; c < k.p.get_si(); ++c) {
            FqElem e = FqElem::make(k, c);
            CHECK(F.residue(F.lift(e)) == e);
        }
    }
}

TEST_CASE("Tate's algorithm on curves with known reduction") {
    CurveQ E = CurveQ::short_form(-1, 0);
    CurveQ e11{Rat(0), Rat(-1), Rat(1), Rat(-10), Rat(-20)};
    CurveQ e37{Rat(0), Rat(0), Rat(1), Rat(-1), Rat(0)};

    auto rd = tate_reduction(E, LocalFieldDesc::base(2));
    CHECK(rd.kodaira == KodairaType{KodairaType::III, 0});
    CHECK(rd.v_min_disc == 6);
    CHECK(rd.tamagawa == 2);
    CHECK(rd.kind == ReductionKind::additive);

    rd = tate_reduction(E, LocalFieldDesc::base(3));
    CHECK(rd.kind == ReductionKind::good);
    CHECK(rd.v_min_disc == 0);
    CHECK(rd.tamagawa == 1);
    CHECK(rd.good_subkind == GoodSubkind::supersingular);

    rd = tate_reduction(E, LocalFieldDesc::base(5));
    CHECK(rd.kind == ReductionKind::good);
    CHECK(rd.good_subkind == GoodSubkind::ordinary);

    rd = tate_reduction(e11, LocalFieldDesc::base(11));
    CHECK(rd.kodaira == KodairaType{KodairaType::In, 5});
    CHECK(rd.tamagawa == 5);
    CHECK(rd.kind == ReductionKind::multiplicative);
    CHECK(rd.split_mult);

    rd = tate_reduction(e37, LocalFieldDesc::base(37));
    CHECK(rd.kodaira == KodairaType{KodairaType::In, 1});
    CHECK(rd.tamagawa == 1);
    CHECK_FALSE(rd.split_mult);

    rd = tate_reduction(e37, LocalFieldDesc::base(2));
    CHECK(rd.kind == ReductionKind::good);

    rd = tate_reduction(E.twist(3), LocalFieldDesc::base(3));
    CHECK(rd.kodaira == KodairaType{KodairaType::I0star, 0});
    CHECK(rd.v_min_disc == 6);
    CHECK(rd.tamagawa == 4);

    rd = tate_reduction(E.twist(17), LocalFieldDesc::base(2));
    CHECK(rd.kodaira == KodairaType{KodairaType::III, 0});
    CHECK(rd.v_min_disc == 6);
    CHECK(rd.tamagawa == 2);

    rd = tate_reduction(E.twist(2), LocalFieldDesc::base(2));
    CHECK(rd.kodaira == KodairaType{KodairaType::Instar, 2});
    CHECK(rd.v_min_disc == 12);
    CHECK(rd.tamagawa == 4);
}

TEST_CASE("Tate's algorithm minimizes non-minimal models") {
    // y^2 = x^3 - 81 x is y^2 = x^3 - x rescaled by u = 3: good at 3
    auto rd = tate_reduction(CurveQ::short_form(-81, 0), LocalFieldDesc::base(3));
    CHECK(rd.kind == ReductionKind::good);
    CHECK(rd.v_min_disc == 0);
    // rescaled by u = 5: good at 5
    rd = tate_reduction(CurveQ::short_form(-625, 0), LocalFieldDesc::base(5));
    CHECK(rd.kind == ReductionKind::good);
    CHECK(rd.v_min_disc == 0);
    // rational coefficients with denominators are cleared first
    rd = tate_reduction(CurveQ::short_form(-1, Rat(1, 4)), LocalFieldDesc::base(2));
    CHECK(rd.kind == ReductionKind::good);
    CHECK(rd.v_min_disc == 0);
}

TEST_CASE("reduction over quadratic completions: twisted family at 2") {
    CurveQ E = CurveQ::short_form(-1, 0);
    struct Row { long rep; long v; long c; };
    // one representative per residue class of the completion classification
    for (const Row& r : std::vector<Row>{{17, 6, 2}, {5, 6, 2}, {3, 12, 2}, {7, 12, 4},
                                         {2, 12, 4}, {10, 12, 4}, {6, 12, 2}, {14, 12, 2}}) {
        auto rd = tate_reduction(E, LocalFieldDesc::completion(2, r.rep));
        INFO("n=", r.rep);
        CHECK(rd.v_min_disc == r.v);
        CHECK(rd.tamagawa == r.c);
    }
    // base change to the unramified quadratic keeps good reduction good
    auto rd = tate_reduction(E, LocalFieldDesc::completion(3, -1));
    CHECK(rd.kind == ReductionKind::good);
}

TEST_CASE("residue curve data at good places") {
    CurveQ E = CurveQ::short_form(-1, 0);
    auto info = residue_curve_info(E, LocalFieldDesc::base(3));
    CHECK(info.count_fp == 4);
    CHECK(info.supersingular);
    CHECK(info.two_torsion_dim == 2);

    info = residue_curve_info(E, LocalFieldDesc::base(5));
    CHECK(info.count_fp == 8);
    CHECK_FALSE(info.supersingular);
    Int a = 5 + 1 - 8;
    CHECK(info.count_fq == info.count_fp);  // base field: same count
    CHECK(a * a <= 20);

    // over the unramified quadratic the count follows the trace relation
    info = residue_curve_info(E, LocalFieldDesc::completion(5, -2));
    CHECK(info.count_fp == 8);
    CHECK(info.count_fq == curve_count_fp2(5, 8));

    CHECK_THROWS_AS(residue_curve_info(E, LocalFieldDesc::base(2)), input_error);
}
