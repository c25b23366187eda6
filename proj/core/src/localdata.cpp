#include "quadtwist/localdata.hpp"

namespace quadtwist {

SplitType splitting_type(const Int& D, const Int& p) {
    if (D == 0 || D == 1 || !is_squarefree(D))
        throw input_error("splitting_type: D must be squarefree and != 0, 1");
    if (!is_prime(p)) throw input_error("splitting_type: p must be prime");
    if (p == 2) {
        Int r = ((D % 8) + 8) % 8;
        if (r == 1) return SplitType::split;
        if (r == 5) return SplitType::inert;
        return SplitType::ramified;
    }
    if (D % p == 0) return SplitType::ramified;
    return kronecker_symbol(D, p) == 1 ? SplitType::split : SplitType::inert;
}

Int classify_q2_extension(const Int& n) {
    if (n == 0 || n == 1 || !is_squarefree(n))
        throw input_error("classify_q2_extension: n must be squarefree and != 0, 1");
    if (mpz_odd_p(n.get_mpz_t())) {
        long r = mpz_fdiv_ui(n.get_mpz_t(), 8);
        switch (r) {
            case 1: return 1;    // Q_2
            case 5: return -3;   // unramified
            case 7: return -1;
            case 3: return 3;
        }
        throw internal_error("classify_q2_extension: unreachable");
    }
    long r = mpz_fdiv_ui(n.get_mpz_t(), 16);
    switch (r) {
        case 2: return 2;
        case 6: return 6;
        case 10: return -6;
        case 14: return -2;
    }
    throw internal_error("classify_q2_extension: even n not 2 mod 4");
}

LocalFieldDesc LocalFieldDesc::base(Int p) {
    if (!is_prime(p)) throw input_error("LocalFieldDesc: p must be prime");
    LocalFieldDesc F;
    F.p = std::move(p);
    return F;
}

LocalFieldDesc LocalFieldDesc::completion(Int p, Int d) {
    SplitType st = splitting_type(d, p);
    LocalFieldDesc F;
    F.p = std::move(p);
    if (st == SplitType::split) return F;  // K_w = Q_p
    F.d = std::move(d);
    F.kind = st == SplitType::inert ? Kind::unramified_quad : Kind::ramified_quad;
    return F;
}

long LocalFieldDesc::disc_exponent() const {
    if (kind != Kind::ramified_quad) return 0;
    if (p != 2) return 1;
    // disc(K/Q) = 4d for d = 2, 3 mod 4; locally v_2(4d)
    return mpz_odd_p(d.get_mpz_t()) ? 2 : 3;
}

QuadElem LocalFieldDesc::uniformizer() const {
    Int tag = d == 0 ? Int(-1) : d;
    if (kind != Kind::ramified_quad) return QuadElem::from_rat(Rat(p), tag);
    if (p == 2 && mpz_odd_p(d.get_mpz_t()))
        return QuadElem(Rat(1), Rat(1), d);  // 1 + sqrt(d), d = 3 mod 4
    return QuadElem::sqrt_d(d);              // p | d
}

long LocalFieldDesc::valuation(const QuadElem& z) const {
    if (z.is_zero()) return static_cast<long>(kValuationInfinity);
    if (kind == Kind::base) {
        if (!z.is_rational()) throw internal_error("valuation: element not in Q_p");
        return padic_valuation(z.a, p);
    }
    long vn = padic_valuation(z.norm(), p);
    if (kind == Kind::ramified_quad) return vn;
    if (vn % 2 != 0) throw internal_error("valuation: odd norm valuation, unramified");
    return vn / 2;
}

FqField LocalFieldDesc::residue_field() const {
    if (kind != Kind::unramified_quad) return FqField::prime_field(p);
    if (p == 2) return FqField::f4();
    return FqField::quadratic(p, d);
}

namespace {

Int rat_red(const Rat& r, const Int& p) {
    Int inv;
    if (!mpz_invert(inv.get_mpz_t(), r.get_den().get_mpz_t(), p.get_mpz_t()))
        throw internal_error("residue: denominator not a unit");
    return ((r.get_num() * inv) % p + p) % p;
}

}  // namespace

FqElem LocalFieldDesc::residue(const QuadElem& z) const {
    FqField rf = residue_field();  // NB: value member fields are copied below
    switch (kind) {
        case Kind::base:
            if (!z.is_rational()) throw internal_error("residue: element not in Q_p");
            return FqElem::make(rf, rat_red(z.a, p));
        case Kind::unramified_quad:
            if (p == 2) {
                // O = Z_2[w], w = (1 + sqrt d)/2; z = (a - b) + 2b w
                return FqElem::make(rf, rat_red(z.a - z.b, p), rat_red(2 * z.b, p));
            }
            return FqElem::make(rf, rat_red(z.a, p), rat_red(z.b, p));
        case Kind::ramified_quad:
            if (p == 2 && mpz_odd_p(d.get_mpz_t()))
                return FqElem::make(rf, rat_red(z.a + z.b, p));  // sqrt d = pi - 1
            return FqElem::make(rf, rat_red(z.a, p));
    }
    throw internal_error("residue: unreachable");
}

QuadElem LocalFieldDesc::lift(const FqElem& r) const {
    Int tag = d == 0 ? Int(-1) : d;
    if (kind != Kind::unramified_quad) return QuadElem::from_rat(Rat(r.c0), tag);
    if (p == 2) {
        // c0 + c1 w with w = (1 + sqrt d)/2
        Rat half(r.c1, 2);
        half.canonicalize();
        return QuadElem(Rat(r.c0) + half, half, d);
    }
    return QuadElem(Rat(r.c0), Rat(r.c1), d);
}

QuadElem LocalFieldDesc::embed(const Rat& r) const {
    Int tag = d == 0 ? Int(-1) : d;
    return QuadElem::from_rat(r, tag);
}

std::string KodairaType::str() const {
    switch (family) {
        case I0: return "I0";
        case In: return "I" + std::to_string(n);
        case II: return "II";
        case III: return "III";
        case IV: return "IV";
        case I0star: return "I0*";
        case Instar: return "I" + std::to_string(n) + "*";
        case IVstar: return "IV*";
        case IIIstar: return "III*";
        case IIstar: return "II*";
    }
    return "?";
}

}  // namespace quadtwist
