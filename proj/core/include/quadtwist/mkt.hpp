#pragma once

#include "quadtwist/localdata.hpp"

namespace quadtwist {

enum class PlaceClass { good, split_mult, nonsplit_mult, additive };

struct ClassifiedPlace {
    Int p;
    SplitType split;  // splitting in K; never SplitType::split within S0
    PlaceClass cls;   // reduction class of E over Q_p
};

struct PlaceClassification {
    std::vector<Int> S;               // primes ramified in K or bad for E
    std::vector<ClassifiedPlace> S0;  // the non-split members of S
};

PlaceClassification classify_places(const CurveQ& E, const Int& D);

// archimedean norm-index contribution
int delta_infinity(const CurveQ& E, const Int& D);

struct PlaceTerm {
    Int p;
    Rat A;      // log2 of the Tamagawa ratio c_v c_{D,v} / c_w
    Rat B;      // coefficient of log2(p) from discriminants and the different
    long term;  // the integer local contribution
};

// per-place terms of the finite part of the index exponent
std::vector<PlaceTerm> delta_f_product(const CurveQ& E, const Int& D);

struct MktBreakdown {
    int delta_inf = 0;
    std::vector<PlaceTerm> terms;
    long delta_f = 0;
    long delta = 0;
};
// index exponent via the product formula: delta = delta_inf + delta_f
MktBreakdown mkt_index(const CurveQ& E, const Int& D);

struct KramerBreakdown {
    int delta_inf = 0;
    long delta_g = 0;  // good places
    long delta_m = 0;  // multiplicative places
    long delta_a = 0;  // additive places
    long delta = 0;
};
// same exponent through the good/multiplicative/additive decomposition
KramerBreakdown delta_kramer(const CurveQ& E, const Int& D);

// closed form of the exponent for y^2 = x^3 - x and K = Q(sqrt(n))
long mkt_congruent_closed_form(const Int& n);

}  // namespace quadtwist
