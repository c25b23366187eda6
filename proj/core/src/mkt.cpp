#include "quadtwist/mkt.hpp"

#include <algorithm>
#include <set>

namespace quadtwist {

namespace {

void check_inputs(const CurveQ& E, const Int& D) {
    if (!E.is_short())
        throw input_error("mkt: curve must be in short Weierstrass form");
    if (E.discriminant() == 0) throw input_error("mkt: singular curve");
    if (D == 0 || D == 1 || !is_squarefree(D))
        throw input_error("mkt: D must be squarefree and != 0, 1");
}

std::set<Int> candidate_primes(const CurveQ& E, const Int& D) {
    std::set<Int> ps{Int(2)};
    Rat disc = E.discriminant();
    for (const auto& [p, e] : factor(disc.get_num()).factors) ps.insert(p);
    for (const auto& [p, e] : factor(disc.get_den()).factors) ps.insert(p);
    for (const auto& [p, e] : factor(D).factors) ps.insert(p);
    return ps;
}

PlaceClass reduction_class(const ReductionData& rd) {
    switch (rd.kind) {
        case ReductionKind::good: return PlaceClass::good;
        case ReductionKind::multiplicative:
            return rd.split_mult ? PlaceClass::split_mult : PlaceClass::nonsplit_mult;
        case ReductionKind::additive: return PlaceClass::additive;
    }
    throw internal_error("reduction_class: unreachable");
}

// log2 of a positive rational that must be a power of two
long log2_exact(const Int& num, const Int& den) {
    auto is_pow2 = [](const Int& x) {
        return x > 0 && mpz_popcount(x.get_mpz_t()) == 1;
    };
    if (!is_pow2(num) || !is_pow2(den))
        throw internal_error("mkt: Tamagawa ratio is not a power of two");
    return static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
}

PlaceTerm place_term(const CurveQ& E, const Int& D, const Int& p) {
    LocalFieldDesc base = LocalFieldDesc::base(p);
    LocalFieldDesc ext = LocalFieldDesc::completion(p, D);
    ReductionData rv = tate_reduction(E, base);
    ReductionData rdv = tate_reduction(E.twist(D), base);
    ReductionData rw = tate_reduction(E, ext);

    PlaceTerm t;
    t.p = p;
    Rat ratio = Rat(rv.tamagawa) * Rat(rdv.tamagawa) / Rat(rw.tamagawa);
    ratio.canonicalize();
    t.A = Rat(log2_exact(ratio.get_num(), ratio.get_den()));
    long f = ext.f();
    t.B = Rat(-(rv.v_min_disc + rdv.v_min_disc) + 6 * ext.disc_exponent() +
                  f * rw.v_min_disc,
              12);
    t.B.canonicalize();
    Rat total = p == 2 ? t.A + t.B : t.A;
    if (p != 2 && t.B != 0)
        throw internal_error("mkt: non-vanishing log term at an odd place");
    total.canonicalize();
    if (total.get_den() != 1)
        throw internal_error("mkt: non-integral local contribution");
    t.term = static_cast<long>(total.get_num().get_si());
    return t;
}

}  // namespace

PlaceClassification classify_places(const CurveQ& E, const Int& D) {
    check_inputs(E, D);
    PlaceClassification out;
    for (const Int& p : candidate_primes(E, D)) {
        SplitType st = splitting_type(D, p);
        ReductionData rd = tate_reduction(E, LocalFieldDesc::base(p));
        bool bad = rd.kind != ReductionKind::good;
        if (!bad && st != SplitType::ramified) continue;
        out.S.push_back(p);
        if (st == SplitType::split) continue;
        out.S0.push_back({p, st, reduction_class(rd)});
    }
    return out;
}

int delta_infinity(const CurveQ& E, const Int& D) {
    check_inputs(E, D);
    return (D < 0 && E.discriminant() > 0) ? 1 : 0;
}

std::vector<PlaceTerm> delta_f_product(const CurveQ& E, const Int& D) {
    PlaceClassification pc = classify_places(E, D);
    std::vector<PlaceTerm> terms;
    for (const auto& cp : pc.S0) terms.push_back(place_term(E, D, cp.p));
    return terms;
}

MktBreakdown mkt_index(const CurveQ& E, const Int& D) {
    MktBreakdown out;
    out.delta_inf = delta_infinity(E, D);
    out.terms = delta_f_product(E, D);
    for (const auto& t : out.terms) out.delta_f += t.term;
    out.delta = out.delta_inf + out.delta_f;
    return out;
}

KramerBreakdown delta_kramer(const CurveQ& E, const Int& D) {
    PlaceClassification pc = classify_places(E, D);
    KramerBreakdown out;
    out.delta_inf = delta_infinity(E, D);
    Rat disc = E.discriminant();
    for (const auto& cp : pc.S0) {
        const Int& p = cp.p;
        LocalFieldDesc base = LocalFieldDesc::base(p);
        ReductionData rd = tate_reduction(E, base);
        Place v = Place::finite(p);
        switch (cp.cls) {
            case PlaceClass::good: {
                if (p == 2) {
                    ResidueCurveInfo info = residue_curve_info(E, base);
                    long v2D = padic_valuation(D, Int(2));
                    if (info.supersingular) {
                        out.delta_g += (v2D % 2 != 0) ? 1 : 0;
                    } else {
                        out.delta_g += (3 + hilbert_symbol(disc, Rat(D), v)) / 2;
                    }
                } else {
                    ResidueCurveInfo info = residue_curve_info(E, base);
                    out.delta_g += info.two_torsion_dim;
                }
                break;
            }
            case PlaceClass::split_mult:
                out.delta_m += (1 + hilbert_symbol(disc, Rat(D), v)) / 2;
                break;
            case PlaceClass::nonsplit_mult: {
                int sgn = rd.v_min_disc % 2 == 0 ? 1 : -1;
                if (cp.split == SplitType::inert) {
                    out.delta_m += (1 + sgn) / 2;
                } else {
                    out.delta_m += (1 + hilbert_symbol(disc, Rat(D), v)) / 2 * sgn + 1;
                }
                break;
            }
            case PlaceClass::additive:
                out.delta_a += place_term(E, D, p).term;
                break;
        }
    }
    out.delta = out.delta_inf + out.delta_g + out.delta_m + out.delta_a;
    return out;
}

long mkt_congruent_closed_form(const Int& n) {
    if (n == 0 || n == 1 || !is_squarefree(n))
        throw input_error("mkt_congruent_closed_form: n must be squarefree and != 0, 1");
    long w = 2 * omega0(n);
    long r = static_cast<long>(mpz_fdiv_ui(n.get_mpz_t(), 8));
    if (n > 0) {
        if (r == 1) return w;
        if (r == 5 || r == 7) return 1 + w;
        if (r == 6) return 3 + w;
        return 2 + w;  // r = 2 or 3
    }
    if (r == 1) return 1 + w;
    if (r == 5 || r == 7) return 2 + w;
    if (r == 6) return 4 + w;
    return 3 + w;  // r = 2 or 3
}

}  // namespace quadtwist
