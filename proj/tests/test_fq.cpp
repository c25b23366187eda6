#include "doctest.h"

#include <random>
#include <vector>

#include "quadtwist/fq.hpp"

using namespace quadtwist;

namespace {

std::vector<FqElem> all_elements(const FqField& F) {
    std::vector<FqElem> out;
    long p = F.p.get_si();
    if (F.f == 1) {
        for (long a = 0; a < p; ++a) out.push_back(FqElem::make(F, a));
    } else {
        for (long a = 0; a < p; ++a)
            for (long b = 0; b < p; ++b) out.push_back(FqElem::make(F, a, b));
    }
    return out;
}

long find_nonsquare(long p) {
    for (long s = 2; s < p; ++s) {
        long e = 1;
        for (long i = 0; i < (p - 1) / 2; ++i) e = (e * s) % p;
        if (e == p - 1) return s;
    }
    return -1;
}

}  // namespace

TEST_CASE("finite field axioms, inverses and Frobenius order") {
    std::vector<FqField> fields = {FqField::prime_field(2), FqField::prime_field(3),
                                   FqField::prime_field(13), FqField::f4(),
                                   FqField::quadratic(3, find_nonsquare(3)),
                                   FqField::quadratic(7, find_nonsquare(7))};
    std::mt19937_64 rng(61);
    for (const FqField& F : fields) {
        auto elems = all_elements(F);
        FqElem one = FqElem::make(F, 1);
        for (const FqElem& x : elems) {
            if (!x.is_zero()) {
                CHECK(x * x.inv() == one);
                CHECK(x.pow(F.q() - 1) == one);  // multiplicative group order
            }
            CHECK(x.pow(F.q()) == x);  // Frobenius to the f-th power is identity
            CHECK((x + (-x)).is_zero());
        }
        for (int i = 0; i < 100; ++i) {
            const FqElem& a = elems[rng() % elems.size()];
            const FqElem& b = elems[rng() % elems.size()];
            const FqElem& c = elems[rng() % elems.size()];
            CHECK((a + b) * c == a * c + b * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("squares and square roots in finite fields") {
    std::vector<FqField> fields = {FqField::prime_field(2), FqField::prime_field(3),
                                   FqField::prime_field(13), FqField::f4(),
                                   FqField::quadratic(5, find_nonsquare(5))};
    for (const FqField& F : fields) {
        long squares = 0;
        for (const FqElem& x : all_elements(F)) {
            FqElem sq = x * x;
            CHECK(fq_is_square(sq));
            FqElem r = sq;
            CHECK(fq_sqrt(sq, r));
            CHECK(r * r == sq);
            if (fq_is_square(x)) ++squares;
        }
        long q = F.q().get_si();
        // in characteristic 2 every element is a square; otherwise (q+1)/2 are
        CHECK(squares == (F.p == 2 ? q : (q + 1) / 2));
    }
}

TEST_CASE("cube roots in characteristic 3") {
    for (const FqField& F : {FqField::prime_field(3), FqField::quadratic(3, find_nonsquare(3))}) {
        for (const FqElem& x : all_elements(F)) {
            FqElem c = fq_cbrt_char3(x * x * x);
            CHECK(c == x);
        }
    }
}

TEST_CASE("polynomial roots over finite fields") {
    FqField F = FqField::prime_field(7);
    auto e = [&](long v) { return FqElem::make(F, ((v % 7) + 7) % 7); };
    // (X - 1)(X - 2)(X - 4) = X^3 - 7X^2 + 14X - 8 == X^3 - 1 mod 7
    FqPoly f = {e(-1), e(0), e(0), e(1)};
    CHECK(fq_distinct_root_count(F, f) == 3);
    auto roots = fq_small_roots(F, f);
    CHECK(roots.size() == 3);
    for (const FqElem& r : roots) CHECK((r * r * r) == e(1));
    // X^2 + 1 has no roots mod 7
    FqPoly g = {e(1), e(0), e(1)};
    CHECK(fq_distinct_root_count(F, g) == 0);
    // repeated roots counted once: (X - 3)^2
    FqPoly h = {e(9), e(-6), e(1)};
    CHECK(fq_distinct_root_count(F, h) == 1);
    FqElem y = e(0);
    // Y^2 + Y - 2: roots 1 and -2 mod 7
    CHECK(fq_quadratic_root(e(1), e(2), y));
    CHECK(y * y + y == e(2));
    // Y^2 + 0Y - 3: 3 is not a square mod 7
    CHECK_FALSE(fq_quadratic_root(e(0), e(3), y));
}

TEST_CASE("curve point counts against a direct count and the Hasse bound") {
    std::mt19937_64 rng(67);
    for (long p : {2L, 3L, 5L, 7L, 13L, 31L}) {
        for (int trial = 0; trial < 30; ++trial) {
            Int a1 = rng() % p, a2 = rng() % p, a3 = rng() % p, a4 = rng() % p, a6 = rng() % p;
            // direct affine count + point at infinity
            long n = 1;
            for (long x = 0; x < p; ++x)
                for (long y = 0; y < p; ++y) {
                    Int lhs = (Int(y) * y + a1 * x * y + a3 * y) % p;
                    Int rhs = (Int(x) * x * x + a2 * x * x + a4 * x + a6) % p;
                    if (lhs == rhs) ++n;
                }
            CHECK(curve_count_fp(p, a1, a2, a3, a4, a6) == n);
        }
    }
    // Hasse bound and Weil relation for smooth curves
    for (long p : {5L, 13L, 31L}) {
        long n = curve_count_fp(p, 0, 0, 0, 1, 1);  // y^2 = x^3 + x + 1, smooth at these p
        Int a = p + 1 - n;
        CHECK(a * a <= 4 * p);
        CHECK(curve_count_fp2(p, n) == Int(p) * p + 1 - (a * a - 2 * p));
    }
}

TEST_CASE("supersingularity of known reductions") {
    // y^2 = x^3 - x over F_3 has 4 = p + 1 points: supersingular
    long n3 = curve_count_fp(3, 0, 0, 0, -1, 0);
    CHECK(n3 == 4);
    CHECK(is_supersingular(3, n3));
    // y^2 + y = x^3 over F_2 is supersingular
    long n2 = curve_count_fp(2, 0, 0, 1, 0, 0);
    CHECK(is_supersingular(2, n2));
    // y^2 = x^3 + x + 1 over F_5 has trace != 0 mod 5: ordinary
    long n5 = curve_count_fp(5, 0, 0, 0, 1, 1);
    CHECK_FALSE(is_supersingular(5, n5));
}

TEST_CASE("two-torsion dimension matches a direct count") {
    for (long p : {3L, 5L, 7L, 13L}) {
        FqField F = FqField::prime_field(p);
        std::mt19937_64 rng(71 + p);
        for (int trial = 0; trial < 20; ++trial) {
            long A = rng() % p, B = rng() % p;
            Int disc = Int(-16) * (4 * Int(A) * A * A + 27 * Int(B) * B);
            if (disc % p == 0) continue;  // singular reduction
            // 2-torsion points are (x, 0) with x^3 + A x + B = 0
            long roots = 0;
            for (long x = 0; x < p; ++x)
                if ((Int(x) * x * x + A * x + B) % p == 0) ++roots;
            int dim = (roots == 3) ? 2 : (roots >= 1 ? 1 : 0);
            auto e = [&](long v) { return FqElem::make(F, v); };
            CHECK(two_torsion_dim(F, e(0), e(0), e(0), e(A), e(B)) == dim);
        }
    }
}
