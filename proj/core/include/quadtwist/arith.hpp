#pragma once

// Exact integer/rational arithmetic, factorization and the symbol
// computations (Kronecker, Hilbert) everything else consumes.
// Big integers and rationals are GMP's mpz_class / mpq_class.

#include <gmpxx.h>

#include <limits>
#include <utility>
#include <vector>

#include "quadtwist/errors.hpp"

namespace quadtwist {

using Int = mpz_class;
using Rat = mpq_class;

// v_p(0) = +infinity.
inline constexpr long kValuationInfinity = std::numeric_limits<long>::max();

struct PrimeFactorization {
    int sign = 1;  // +1 or -1
    std::vector<std::pair<Int, unsigned>> factors;  // primes strictly increasing

    Int reconstruct() const;
};

// A place of Q: a finite prime or the real place.
struct Place {
    bool infinite = false;
    Int p = 0;  // prime when finite

    static Place real() { return Place{true, 0}; }
    static Place finite(Int prime) { return Place{false, std::move(prime)}; }

    bool operator==(const Place& o) const {
        return infinite == o.infinite && p == o.p;
    }
    bool operator<(const Place& o) const {
        if (infinite != o.infinite) return infinite;  // finite places first
        return p < o.p;
    }
};

long padic_valuation(const Int& x, const Int& p);
long padic_valuation(const Rat& x, const Int& p);

bool is_prime(const Int& n);

// Deterministic factorization: trial division, then Miller-Rabin +
// Pollard rho.  Rejects 0 and inputs beyond 18 digits.
PrimeFactorization factor(const Int& n);

// Number of distinct odd prime divisors.
int omega0(const Int& n);

bool is_squarefree(const Int& n);
Int squarefree_part(const Int& n);

int kronecker_symbol(const Int& a, const Int& n);

// Hilbert norm-residue symbol (a,b)_v over the completion of Q at v.
// +1 iff z^2 = a x^2 + b y^2 has a nonzero solution.  Rejects a = 0 or b = 0.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// Exact square root helpers.
bool is_perfect_square(const Int& n);
bool rational_sqrt(const Rat& x, Rat& out);  // out >= 0 when it exists

}  // namespace quadtwist
