#pragma once

#include <string>

#include "quadtwist/curves.hpp"
#include "quadtwist/fq.hpp"

namespace quadtwist {

enum class SplitType { split, inert, ramified };
SplitType splitting_type(const Int& D, const Int& p);

// For K = Q(sqrt(n)), the completion at 2 is one of seven fields: Q_2 itself
// or Q_2(sqrt(d')) for d' in {-3, -1, 3, -2, 2, -6, 6} (-3 is the unramified
// one).  Returns d' (1 means Q_2).
Int classify_q2_extension(const Int& n);

// A local field: Q_p itself, or the completion of Q(sqrt(d)) at a
// non-split prime p.
struct LocalFieldDesc {
    enum class Kind { base, unramified_quad, ramified_quad };
    Int p;
    Kind kind = Kind::base;
    Int d = 0;  // squarefree d; 0 for base

    static LocalFieldDesc base(Int p);
    // completion of Q(sqrt(d)) above p; p split gives back Q_p (Kind::base)
    static LocalFieldDesc completion(Int p, Int d);

    int e() const { return kind == Kind::ramified_quad ? 2 : 1; }
    int f() const { return kind == Kind::unramified_quad ? 2 : 1; }
    // valuation exponent of the local discriminant of K_w/Q_p
    long disc_exponent() const;

    QuadElem uniformizer() const;
    long valuation(const QuadElem& z) const;  // w-adic, v(pi) = 1
    FqField residue_field() const;
    FqElem residue(const QuadElem& z) const;  // needs v(z) >= 0
    QuadElem lift(const FqElem& r) const;
    // element tagged with this field's d (rational contexts use d of K)
    QuadElem embed(const Rat& r) const;
};

struct KodairaType {
    enum Family { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };
    Family family = I0;
    long n = 0;  // for In / Instar
    std::string str() const;
    bool operator==(const KodairaType& o) const {
        return family == o.family && n == o.n;
    }
};

enum class ReductionKind { good, multiplicative, additive };
enum class GoodSubkind { none, ordinary, supersingular };

struct ReductionData {
    KodairaType kodaira;
    long v_min_disc = 0;
    Int tamagawa = 1;
    ReductionKind kind = ReductionKind::good;
    bool split_mult = false;
    GoodSubkind good_subkind = GoodSubkind::none;
};

// Full Tate algorithm for E/Q base-changed to the given local field.
ReductionData tate_reduction(const CurveQ& E, const LocalFieldDesc& F);

struct ResidueCurveInfo {
    long count_fp = 0;   // points of the reduced curve over F_p
    Int count_fq = 0;    // over the residue field of F
    bool supersingular = false;
    int two_torsion_dim = 0;  // over the residue field of F
};
// Requires good reduction of the minimal model at F (checked).
ResidueCurveInfo residue_curve_info(const CurveQ& E, const LocalFieldDesc& F);

}  // namespace quadtwist
