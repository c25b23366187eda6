#include "quadtwist/tunnell.hpp"

#include <cmath>
#include <vector>

namespace quadtwist {

long count_representations(long a, long b, long c, long n) {
    if (a <= 0 || b <= 0 || c <= 0) throw input_error("count_representations: form must be positive definite");
    if (n < 0) throw input_error("count_representations: n must be >= 0");
    long count = 0;
    for (long x = 0; a * x * x <= n; ++x) {
        long rx = n - a * x * x;
        long mx = x == 0 ? 1 : 2;
        for (long y = 0; b * y * y <= rx; ++y) {
            long rem = rx - b * y * y;
            long my = y == 0 ? 1 : 2;
            if (rem % c != 0) continue;
            long z2 = rem / c;
            long z = static_cast<long>(std::llround(std::sqrt(static_cast<double>(z2))));
            while (z * z > z2) --z;
            while ((z + 1) * (z + 1) <= z2) ++z;
            if (z * z == z2) count += mx * my * (z == 0 ? 1 : 2);
        }
    }
    return count;
}

namespace {

long to_long(const Int& n) {
    if (!n.fits_slong_p()) throw input_error("tunnell: n too large");
    return n.get_si();
}

Int half_difference(long c1, long c2, const char* what) {
    if (c2 % 2 != 0) throw internal_error(what);
    return Int(c1) - Int(c2 / 2);
}

}  // namespace

Int coeff_a(const Int& n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t()) || !is_squarefree(n))
        throw input_error("coeff_a: n must be positive, odd and squarefree");
    long m = to_long(n);
    long c1 = count_representations(2, 1, 32, m);
    long c2 = count_representations(2, 1, 8, m);
    return half_difference(c1, c2, "coeff_a: odd subtracted count");
}

Int coeff_a_prime(const Int& m) {
    if (m <= 0 || mpz_even_p(m.get_mpz_t()) || !is_squarefree(m))
        throw input_error("coeff_a_prime: m must be positive, odd and squarefree");
    long mm = to_long(m);
    long c1 = count_representations(4, 1, 32, mm);
    long c2 = count_representations(4, 1, 8, mm);
    return half_difference(c1, c2, "coeff_a_prime: odd subtracted count");
}

Rat l_value_ratio(const Int& n) {
    if (n <= 0 || !is_squarefree(n))
        throw input_error("l_value_ratio: n must be positive squarefree");
    if (mpz_odd_p(n.get_mpz_t())) {
        Int a = coeff_a(n);
        Rat r(a * a, 4);
        r.canonicalize();
        return r;
    }
    Int ap = coeff_a_prime(n / 2);
    Rat r(ap * ap, 2);
    r.canonicalize();
    return r;
}

CongruentVerdict congruent_verdict(const Int& n) {
    Rat r = l_value_ratio(n);
    if (r != 0) return CongruentVerdict::not_congruent;
    long res = static_cast<long>(mpz_fdiv_ui(n.get_mpz_t(), 8));
    if (res == 5 || res == 6 || res == 7) return CongruentVerdict::congruent_conditional;
    return CongruentVerdict::undetermined;
}

namespace {

// accumulate representation counts of a x^2 + y^2 + c z^2 up to hi
std::vector<long> count_table(long a, long c, long hi) {
    std::vector<long> t(hi + 1, 0);
    for (long x = 0; a * x * x <= hi; ++x) {
        long mx = x == 0 ? 1 : 2;
        for (long y = 0; a * x * x + y * y <= hi; ++y) {
            long my = y == 0 ? 1 : 2;
            long base = a * x * x + y * y;
            for (long z = 0; base + c * z * z <= hi; ++z)
                t[base + c * z * z] += mx * my * (z == 0 ? 1 : 2);
        }
    }
    return t;
}

}  // namespace

void tunnell_range(long lo, long hi,
                   const std::function<void(const TunnellRecord&)>& emit) {
    if (lo < 1 || hi < lo) throw input_error("tunnell_range: need 1 <= lo <= hi");
    auto t2_32 = count_table(2, 32, hi);
    auto t2_8 = count_table(2, 8, hi);
    auto t4_32 = count_table(4, 32, hi);
    auto t4_8 = count_table(4, 8, hi);
    for (long n = lo; n <= hi; ++n) {
        if (!is_squarefree(Int(n))) continue;
        TunnellRecord rec;
        rec.n = n;
        if (n % 2 == 1) {
            if (t2_8[n] % 2 != 0) throw internal_error("tunnell_range: odd count");
            rec.coeff = Int(t2_32[n]) - Int(t2_8[n]) / 2;
            rec.l_ratio = Rat(rec.coeff * rec.coeff, 4);
        } else {
            long m = n / 2;
            if (t4_8[m] % 2 != 0) throw internal_error("tunnell_range: odd count");
            rec.coeff = Int(t4_32[m]) - Int(t4_8[m]) / 2;
            rec.l_ratio = Rat(rec.coeff * rec.coeff, 2);
        }
        rec.l_ratio.canonicalize();
        if (rec.l_ratio != 0) {
            rec.verdict = CongruentVerdict::not_congruent;
        } else {
            long res = n % 8;
            rec.verdict = (res == 5 || res == 6 || res == 7)
                              ? CongruentVerdict::congruent_conditional
                              : CongruentVerdict::undetermined;
        }
        emit(rec);
    }
}

}  // namespace quadtwist
