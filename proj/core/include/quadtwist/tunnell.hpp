#pragma once

#include <functional>

#include "quadtwist/arith.hpp"

namespace quadtwist {

// number of integer solutions of a x^2 + b y^2 + c z^2 = n
long count_representations(long a, long b, long c, long n);

// theta coefficients for odd / even squarefree n
Int coeff_a(const Int& n);        // n odd squarefree positive
Int coeff_a_prime(const Int& m);  // m = n/2 odd squarefree positive

// algebraic part of the central L-value: a_n^2/4 (n odd), a'_{n/2}^2/2 (even)
Rat l_value_ratio(const Int& n);

enum class CongruentVerdict { not_congruent, congruent_conditional, undetermined };
CongruentVerdict congruent_verdict(const Int& n);

struct TunnellRecord {
    long n = 0;
    Int coeff;          // a_n or a'_{n/2}
    Rat l_ratio;
    CongruentVerdict verdict = CongruentVerdict::undetermined;
};

// squarefree n in [lo, hi] in increasing order, one callback per n
void tunnell_range(long lo, long hi, const std::function<void(const TunnellRecord&)>& emit);

}  // namespace quadtwist
