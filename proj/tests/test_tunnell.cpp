#include "doctest.h"

#include <vector>

#include "quadtwist/tunnell.hpp"

using namespace quadtwist;

namespace {

// naive oracle: integer solutions of a x^2 + b y^2 + c z^2 = n
long naive_count(long a, long b, long c, long n) {
    long count = 0;
    for (long x = 0; a * x * x <= n; ++x)
        for (long y = 0; a * x * x + b * y * y <= n; ++y)
            for (long z = 0; a * x * x + b * y * y + c * z * z <= n; ++z) {
                if (a * x * x + b * y * y + c * z * z != n) continue;
                long mult = (x ? 2 : 1) * (y ? 2 : 1) * (z ? 2 : 1);
                count += mult;
            }
    return count;
}

}  // namespace

TEST_CASE("representation counts match a naive enumeration") {
    for (long n = 0; n <= 400; ++n) {
        for (auto [a, b, c] : {std::tuple<long, long, long>{2, 1, 32},
                               {2, 1, 8},
                               {4, 1, 32},
                               {4, 1, 8}}) {
            INFO("form (", a, ",", b, ",", c, ") n=", n);
            CHECK(count_representations(a, b, c, n) == naive_count(a, b, c, n));
        }
    }
}

TEST_CASE("theta coefficients on known values") {
    CHECK(coeff_a(1) == 1);
    CHECK(coeff_a(3) == 2);
    CHECK(coeff_a(5) == 0);
    CHECK(coeff_a(7) == 0);
    CHECK(coeff_a(17) == -4);
    CHECK(coeff_a(41) == 0);
    CHECK(coeff_a(51) == 4);
    CHECK(coeff_a(57) == 4);
    CHECK(coeff_a(73) == 4);
    CHECK(coeff_a_prime(1) == 1);
    CHECK(coeff_a_prime(3) == 0);
    CHECK(coeff_a_prime(5) == 2);
    CHECK(coeff_a_prime(7) == 0);
    CHECK(coeff_a_prime(13) == -2);
    CHECK(coeff_a_prime(17) == 0);
    CHECK_THROWS_AS(coeff_a(2), input_error);    // even
    CHECK_THROWS_AS(coeff_a(9), input_error);    // not squarefree
    CHECK_THROWS_AS(coeff_a(-3), input_error);   // negative
    CHECK_THROWS_AS(coeff_a_prime(2), input_error);
}

TEST_CASE("coefficients vanish on the rank-positive classes") {
    for (long n = 1; n <= 3000; ++n) {
        if (!is_squarefree(n)) continue;
        long r = n % 8;
        if (r != 5 && r != 6 && r != 7) continue;
        Int c = (n % 2 == 0) ? coeff_a_prime(n / 2) : coeff_a(n);
        INFO("n=", n);
        CHECK(c == 0);
    }
}

TEST_CASE("algebraic central values") {
    CHECK(l_value_ratio(1) == Rat(1, 4));    // a_1^2 / 4
    CHECK(l_value_ratio(3) == 1);            // 2^2 / 4
    CHECK(l_value_ratio(17) == 4);           // (-4)^2 / 4
    CHECK(l_value_ratio(2) == Rat(1, 2));    // a'_1^2 / 2
    CHECK(l_value_ratio(10) == 2);           // a'_5^2 / 2
    CHECK(l_value_ratio(5) == 0);
    CHECK_THROWS_AS(l_value_ratio(-3), input_error);
}

TEST_CASE("congruent number verdicts") {
    CHECK(congruent_verdict(1) == CongruentVerdict::not_congruent);
    CHECK(congruent_verdict(2) == CongruentVerdict::not_congruent);
    CHECK(congruent_verdict(3) == CongruentVerdict::not_congruent);
    CHECK(congruent_verdict(17) == CongruentVerdict::not_congruent);
    CHECK(congruent_verdict(5) == CongruentVerdict::congruent_conditional);
    CHECK(congruent_verdict(6) == CongruentVerdict::congruent_conditional);
    CHECK(congruent_verdict(7) == CongruentVerdict::congruent_conditional);
    // vanishing coefficient outside the guaranteed-parity classes
    CHECK(congruent_verdict(34) == CongruentVerdict::undetermined);
    CHECK(congruent_verdict(41) == CongruentVerdict::undetermined);
}

TEST_CASE("range streaming is consistent with single queries") {
    std::vector<TunnellRecord> recs;
    tunnell_range(1, 200, [&](const TunnellRecord& r) { recs.push_back(r); });
    size_t i = 0;
    long prev = 0;
    for (long n = 1; n <= 200; ++n) {
        if (!is_squarefree(n)) continue;
        REQUIRE(i < recs.size());
        const TunnellRecord& r = recs[i++];
        CHECK(r.n == n);
        CHECK(r.n > prev);
        prev = r.n;
        Int c = (n % 2 == 0) ? coeff_a_prime(n / 2) : coeff_a(n);
        CHECK(r.coeff == c);
        CHECK(r.l_ratio == l_value_ratio(n));
        CHECK(r.verdict == congruent_verdict(n));
    }
    CHECK(i == recs.size());
}
