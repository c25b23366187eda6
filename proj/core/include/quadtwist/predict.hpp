#pragma once

#include <string>
#include <vector>

#include "quadtwist/curves.hpp"
#include "quadtwist/mkt.hpp"
#include "quadtwist/tunnell.hpp"

namespace quadtwist {

enum class PredictionKind { ratio, order_en, heegner_ratio, heegner_order };

// A conditional Sha order or order-ratio together with the exponent ledger
// that produced it and the hypotheses it depends on.
struct ShaPrediction {
    PredictionKind kind = PredictionKind::ratio;
    Rat value = 0;
    // exponent ledger
    int r_df = 0;
    int r_f = 0;
    long delta = 0;
    Int index = 1;
    std::vector<std::string> assumptions;
    std::vector<std::string> notes;
    // diagnostics (orders only; ratios keep them false)
    bool integral = false;
    bool perfect_square = false;
    bool vacuous = false;          // branch coefficient vanished
    bool has_corrected = false;    // index-corrected value for non-integral orders
    Rat corrected_value = 0;
};

// #Sha(E/F) #Sha(E_D/F) / #Sha(E/K) = 2^{r_DF - r_F - delta} * index^2
ShaPrediction sha_ratio(const CurveQ& E, const Int& D, int r_f, int r_df, const Int& index);

// r_K == r_F + r_DF and r_K == r_DF - r_F == delta (mod 2)
bool parity_check(int r_k, int r_f, int r_df, long delta);

enum class Parity { even, odd };
// parity of rank(E(Q(sqrt n))) = rank(E_n(Q)) for E: y^2 = x^3 - x
Parity rank_parity_en(const Int& n);

// predicted #Sha(E/Q(sqrt n)) for E: y^2 = x^3 - x, n in the classes
// n > 0, n = 1,2,3 (8)  or  n < 0, n = 5,6,7 (8)
ShaPrediction sha_order_en(const Int& n);

struct ExampleGReport {
    Int n;
    int m = 0;         // number of prime factors
    Int a_n;
    long v2 = -1;      // 2-adic valuation of a_n; -1 when a_n = 0
    bool match = false;  // v2 == m
    Rat sha_prediction;  // 2^{-2} a_n^2
};
// n = p_1 ... p_m with p_1 = 3 (8) and p_i = 1 (8) otherwise
ExampleGReport example_g_check(const Int& n, int m);

// Heegner-case ratio / order prediction.  D is a negative squarefree
// integer or fundamental discriminant; all bad primes of E must split in K.
ShaPrediction heegner_sha(const CurveQ& E, const Int& D, bool l_vanishes, const Int& index);

// the 23 fundamental discriminants with trivial Sha(E_D/Q) for conductor 37
const std::vector<long>& heegner_trivial_sha_discs();

// Norm index (E(Q) : N_D(Q)) for E(Q) = Z P with trivial torsion and
// imaginary K.  When the real locus has two components and P sits on the
// bounded one, P is not a local norm at the archimedean place, so the index
// is 2; otherwise the test is inconclusive and 1 is only a lower bound.
struct NormIndexReport {
    Int index = 1;
    bool decided = false;
    bool torsion_trivial = false;
    bool two_components = false;   // disc(E) > 0
    bool bounded_component = false;  // P lies on the egg
};
NormIndexReport heegner_norm_index(const CurveQ& E, const Rat& x0, const Rat& y0, const Int& D);

// Both sides of the central-value identities for E: y^2 = x^3 - x and E_n,
// written as (rational) * omega^k / sqrt(|n|).
struct BsdAssembly {
    Int n;
    bool vacuous = false;  // coefficient 0: both sides vanish
    // over Q: L(E_n/Q,1) = lhs_q * omega / sqrt(|n|)
    Rat lhs_q, rhs_q;
    bool equal_q = false;
    Rat sha_en;          // conjectural #Sha(E_n/Q) = 2^{-2 omega0} coeff^2
    Rat tamagawa_q;      // c_inf * prod c_p for E_n / Q
    long torsion_q = 4;
    // over K: L(E/K,1) = lhs_k * omega^2 / sqrt(|n|)
    Rat lhs_k, rhs_k;
    bool equal_k = false;
    Rat sha_ek;          // predicted #Sha(E/K) from the order branches
    Rat tamagawa_k;      // c_inf-product * prod_{w | 2} c_w for E / K
    long torsion_k = 4;
    long disc_mult = 1;  // sqrt|d(K)| = disc_mult * sqrt|n|
    // when the branch value is non-integral, the identity re-checked with the
    // index-corrected order 4 * sha_ek
    bool has_corrected_k = false;
    bool equal_k_corrected = false;
    std::vector<std::string> assumptions;
};
BsdAssembly bsd_assembly_en(const Int& n);

}  // namespace quadtwist
