#include "quadtwist/arith.hpp"

#include <algorithm>
#include <map>

namespace quadtwist {

Int PrimeFactorization::reconstruct() const {
    Int n = sign;
    for (const auto& [p, e] : factors)
        for (unsigned i = 0; i < e; ++i) n *= p;
    return n;
}

long padic_valuation(const Int& x, const Int& p) {
    if (x == 0) return kValuationInfinity;
    Int q = x, r;
    long v = 0;
    for (;;) {
        Int quo = q / p;
        r = q - quo * p;
        if (r != 0) break;
        q = quo;
        ++v;
    }
    return v;
}

long padic_valuation(const Rat& x, const Int& p) {
    if (x == 0) return kValuationInfinity;
    return padic_valuation(x.get_num(), p) - padic_valuation(x.get_den(), p);
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    // GMP's mpz_probab_prime_p is deterministic (BPSW + MR) far beyond the
    // 18-digit cap enforced by factor().
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Int pollard_rho(const Int& n) {
    // Deterministic Brent-style rho; n is odd, composite, not a prime power
    // guard needed -- we retry with successive increments.
    for (Int c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x - y;
            if (diff < 0) diff = -diff;
            if (diff == 0) { d = n; break; }
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) { ++out[n]; return; }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

PrimeFactorization factor(const Int& n) {
    if (n == 0) throw input_error("factor: 0 has no factorization");
    static const Int kLimit = []{ Int l; mpz_ui_pow_ui(l.get_mpz_t(), 10, 18); return l; }();
    Int m = abs(n);
    if (m > kLimit)
        throw input_error("factor: input exceeds the 18-digit bound");

    PrimeFactorization pf;
    pf.sign = n < 0 ? -1 : 1;

    std::map<Int, unsigned> found;
    for (long small : {2L, 3L, 5L, 7L, 11L, 13L}) {
        while (m % small == 0) { ++found[small]; m /= small; }
    }
    // trial division with a 2,3 wheel up to 10^6
    for (Int d = 17; d * d <= m && d <= 1000000; d += (d % 3 == 2 ? 2 : 4)) {
        while (m % d == 0) { ++found[d]; m /= d; }
    }
    if (m > 1) {
        if (is_prime(m)) ++found[m];
        else factor_into(m, found);
    }
    pf.factors.assign(found.begin(), found.end());
    return pf;
}

int omega0(const Int& n) {
    int count = 0;
    for (const auto& [p, e] : factor(n).factors)
        if (p != 2) ++count;
    return count;
}

bool is_squarefree(const Int& n) {
    if (n == 0) return false;
    for (const auto& [p, e] : factor(n).factors)
        if (e > 1) return false;
    return true;
}

Int squarefree_part(const Int& n) {
    if (n == 0) return 0;
    auto pf = factor(n);
    Int r = pf.sign;
    for (const auto& [p, e] : pf.factors)
        if (e % 2 == 1) r *= p;
    return r;
}

int kronecker_symbol(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

namespace {

// (a,b)_p for nonzero integers via the closed unit/valuation formulas.
int hilbert_finite(Int a, Int b, const Int& p) {
    long alpha = padic_valuation(a, p);
    long beta = padic_valuation(b, p);
    Int pa; mpz_pow_ui(pa.get_mpz_t(), p.get_mpz_t(), alpha);
    Int pb; mpz_pow_ui(pb.get_mpz_t(), p.get_mpz_t(), beta);
    Int u = a / pa, v = b / pb;
    if (p == 2) {
        auto eps = [](const Int& x) { return ((x - 1) / 2) % 2 != 0; };
        auto omg = [](const Int& x) { return ((x * x - 1) / 8) % 2 != 0; };
        bool minus = (eps(u) && eps(v)) ^ (alpha % 2 != 0 && omg(v)) ^
                     (beta % 2 != 0 && omg(u));
        return minus ? -1 : 1;
    }
    int r = 1;
    if (alpha % 2 != 0 && beta % 2 != 0 && (p % 4) == 3) r = -r;
    if (beta % 2 != 0) r *= mpz_kronecker(u.get_mpz_t(), p.get_mpz_t());
    if (alpha % 2 != 0) r *= mpz_kronecker(v.get_mpz_t(), p.get_mpz_t());
    return r;
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0)
        throw input_error("hilbert_symbol: arguments must be nonzero");
    if (v.infinite)
        return (a < 0 && b < 0) ? -1 : 1;
    // The symbol only depends on square classes, so clear denominators.
    Int ia = a.get_num() * a.get_den();
    Int ib = b.get_num() * b.get_den();
    return hilbert_finite(ia, ib, v.p);
}

bool is_perfect_square(const Int& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool rational_sqrt(const Rat& x, Rat& out) {
    if (x < 0) return false;
    if (!is_perfect_square(x.get_num()) || !is_perfect_square(x.get_den()))
        return false;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), x.get_num().get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), x.get_den().get_mpz_t());
    out = Rat(sn, sd);
    out.canonicalize();
    return true;
}

}  // namespace quadtwist
