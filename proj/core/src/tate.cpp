#include "quadtwist/localdata.hpp"

namespace quadtwist {

namespace {

struct LocalCurve {
    QuadElem a1, a2, a3, a4, a6;

    QuadElem b2() const { return a1 * a1 + four() * a2; }
    QuadElem b4() const { return two() * a4 + a1 * a3; }
    QuadElem b6() const { return a3 * a3 + four() * a6; }
    QuadElem b8() const {
        return a1 * a1 * a6 + four() * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 -
               a4 * a4;
    }
    QuadElem disc() const {
        QuadElem B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        QuadElem nine = QuadElem::from_rat(Rat(9), a1.d);
        QuadElem c27 = QuadElem::from_rat(Rat(27), a1.d);
        QuadElem eight = QuadElem::from_rat(Rat(8), a1.d);
        return -(B2 * B2 * B8) - eight * B4 * B4 * B4 - c27 * B6 * B6 +
               nine * B2 * B4 * B6;
    }

    QuadElem two() const { return QuadElem::from_rat(Rat(2), a1.d); }
    QuadElem four() const { return QuadElem::from_rat(Rat(4), a1.d); }

    // (x, y) -> (x + r, y + t)
    void translate(const QuadElem& r, const QuadElem& t) {
        QuadElem three = QuadElem::from_rat(Rat(3), a1.d);
        QuadElem na2 = a2 + three * r;
        QuadElem na3 = a3 + r * a1 + two() * t;
        QuadElem na4 = a4 + two() * r * a2 - t * a1 + three * r * r;
        QuadElem na6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t -
                       r * t * a1;
        a2 = na2; a3 = na3; a4 = na4; a6 = na6;
    }
    // (x, y) -> (x, y + s x)
    void shear(const QuadElem& s) {
        QuadElem na1 = a1 + two() * s;
        QuadElem na2 = a2 - s * a1 - s * s;
        QuadElem na4 = a4 - s * a3;
        a1 = na1; a2 = na2; a4 = na4;
    }
    // a_i -> a_i * u^i (substitution x -> x / u^2, y -> y / u^3)
    void rescale(const QuadElem& u) {
        QuadElem u2 = u * u, u3 = u2 * u;
        a1 = a1 * u;
        a2 = a2 * u2;
        a3 = a3 * u3;
        a4 = a4 * u2 * u2;
        a6 = a6 * u3 * u3;
    }
};

struct Ctx {
    const LocalFieldDesc* F;
    FqField k;
    QuadElem pi;

    long val(const QuadElem& z) const { return F->valuation(z); }
    FqElem res(const QuadElem& z) const { return F->residue(z); }
    QuadElem lift(const FqElem& r) const { return F->lift(r); }
    bool char2() const { return F->p == 2; }
    bool char3() const { return F->p == 3; }
    FqElem kzero() const { return FqElem::make(k, 0); }
    FqElem kone() const { return FqElem::make(k, 1); }
};

// Move the singular point of the reduced curve to (0, 0).
void move_singular_point(Ctx& C, LocalCurve& E) {
    FqElem x0 = C.kzero(), y0 = C.kzero();
    if (C.char2()) {
        FqElem a1 = C.res(E.a1), a2 = C.res(E.a2), a3 = C.res(E.a3),
               a4 = C.res(E.a4), a6 = C.res(E.a6);
        if (!a1.is_zero()) {
            x0 = a3 * a1.inv();
            y0 = (x0 * x0 + a4) * a1.inv();
        } else {
            if (!fq_sqrt(a4, x0)) throw internal_error("tate: char-2 sqrt failed");
            FqElem rhs = x0 * x0 * x0 + a2 * x0 * x0 + a4 * x0 + a6;
            if (!fq_sqrt(rhs, y0)) throw internal_error("tate: char-2 sqrt failed");
        }
    } else {
        FqElem b2 = C.res(E.b2()), b4 = C.res(E.b4()), b6 = C.res(E.b6());
        FqPoly g{b6, FqElem::make(C.k, 2) * b4, b2, FqElem::make(C.k, 4)};
        FqPoly gp = fq_poly_derivative(C.k, g);
        if (gp.empty()) {
            // char 3 with b2 = b4 = 0: g = x^3 + b6
            x0 = fq_cbrt_char3(-b6);
        } else {
            FqPoly h = fq_poly_gcd(C.k, g, gp);
            if (h.size() == 2) {
                x0 = -(h[0] * h[1].inv());
            } else if (h.size() == 3) {
                x0 = -(h[1] * (FqElem::make(C.k, 2) * h[2]).inv());
            } else {
                throw internal_error("tate: singular point not found");
            }
        }
        FqElem a1 = C.res(E.a1), a3 = C.res(E.a3);
        y0 = -(a1 * x0 + a3) * FqElem::make(C.k, 2).inv();
    }
    E.translate(C.lift(x0), C.lift(y0));
}

// Does Y^2 + bY - c have a root over k?
bool splits(const Ctx& C, const FqElem& b, const FqElem& c) {
    FqElem root = C.kzero();
    return fq_quadratic_root(b, c, root);
}

struct TateOutcome {
    ReductionData rd;
    LocalCurve minimal;
};

GoodSubkind good_subkind_of(const Ctx& C, const LocalCurve& E);

TateOutcome tate_impl(const CurveQ& Ein, const LocalFieldDesc& F) {
    Ctx C{&F, F.residue_field(), F.uniformizer()};
    const Int tag = F.d == 0 ? Int(-1) : F.d;
    auto emb = [&](const Rat& r) { return QuadElem::from_rat(r, tag); };
    LocalCurve E{emb(Ein.a1), emb(Ein.a2), emb(Ein.a3), emb(Ein.a4), emb(Ein.a6)};
    const QuadElem& pi = C.pi;

    // clear denominators at pi
    for (int guard = 0; guard < 64; ++guard) {
        long worst = 0;
        const QuadElem* as[5] = {&E.a1, &E.a2, &E.a3, &E.a4, &E.a6};
        int ws[5] = {1, 2, 3, 4, 6};
        for (int i = 0; i < 5; ++i)
            if (!as[i]->is_zero())
                worst = std::max(worst, (-C.val(*as[i]) + ws[i] - 1) / ws[i]);
        if (worst == 0) break;
        QuadElem u = pi;
        for (long j = 1; j < worst; ++j) u = u * pi;
        E.rescale(u);
    }

    for (int restarts = 0; restarts < 64; ++restarts) {
        QuadElem Delta = E.disc();
        if (Delta.is_zero()) throw input_error("tate: singular curve");
        long vD = C.val(Delta);

        ReductionData rd;
        rd.v_min_disc = vD;
        if (vD == 0) {
            rd.kodaira = {KodairaType::I0, 0};
            rd.kind = ReductionKind::good;
            rd.good_subkind = good_subkind_of(C, E);
            return {rd, E};
        }

        move_singular_point(C, E);

        if (C.val(E.b2()) == 0) {
            rd.kodaira = {KodairaType::In, vD};
            rd.kind = ReductionKind::multiplicative;
            rd.split_mult = splits(C, C.res(E.a1), C.res(E.a2));
            rd.tamagawa = rd.split_mult ? Int(vD) : Int(vD % 2 == 0 ? 2 : 1);
            return {rd, E};
        }
        rd.kind = ReductionKind::additive;

        if (C.val(E.a6) < 2) {
            rd.kodaira = {KodairaType::II, 0};
            rd.tamagawa = 1;
            return {rd, E};
        }
        if (C.val(E.b8()) < 3) {
            rd.kodaira = {KodairaType::III, 0};
            rd.tamagawa = 2;
            return {rd, E};
        }
        if (C.val(E.b6()) < 3) {
            rd.kodaira = {KodairaType::IV, 0};
            rd.tamagawa = splits(C, C.res(E.a3 / pi), C.res(E.a6 / (pi * pi))) ? 3 : 1;
            return {rd, E};
        }

        // normalize: pi | a1, a2; pi^2 | a3, a4; pi^3 | a6
        if (C.char2()) {
            FqElem s;
            if (!fq_sqrt(C.res(E.a2), s)) throw internal_error("tate: sqrt a2");
            E.shear(C.lift(s));
            FqElem t;
            if (!fq_sqrt(C.res(E.a6 / (pi * pi)), t))
                throw internal_error("tate: sqrt a6");
            E.translate(QuadElem::from_rat(Rat(0), tag), pi * C.lift(t));
        } else {
            E.shear(-(E.a1 / E.two()));
            E.translate(QuadElem::from_rat(Rat(0), tag), -(E.a3 / E.two()));
        }

        // P(T) = T^3 + a2/pi T^2 + a4/pi^2 T + a6/pi^3
        FqElem alpha = C.res(E.a2 / pi);
        FqElem beta = C.res(E.a4 / (pi * pi));
        FqElem gamma = C.res(E.a6 / (pi * pi * pi));
        FqPoly P{gamma, beta, alpha, C.kone()};
        FqPoly Pp = fq_poly_derivative(C.k, P);
        FqPoly h = Pp.empty() ? FqPoly{} : fq_poly_gcd(C.k, P, Pp);

        int mult;  // largest root multiplicity
        FqElem r0 = C.kzero();
        if (Pp.empty()) {
            mult = 3;  // char 3, P = T^3 + gamma
            r0 = fq_cbrt_char3(-gamma);
        } else if (h.size() <= 1) {
            mult = 1;
        } else {
            // h = (T - r) or c (T - r)^2; the multiple root of P is unique
            if (h.size() == 2) {
                r0 = -(h[0] * h[1].inv());
            } else if (C.char2()) {
                if (!fq_sqrt(h[0] * h[2].inv(), r0))
                    throw internal_error("tate: char-2 sqrt at multiple root");
            } else {
                r0 = -(h[1] * (FqElem::make(C.k, 2) * h[2]).inv());
            }
            // gcd degree does not identify the multiplicity in char 2:
            // P = (T-r)^3 exactly when P(T+r) has no T^2, T coefficients
            FqElem c2 = alpha + FqElem::make(C.k, 3) * r0;
            FqElem c1 = beta + FqElem::make(C.k, 2) * alpha * r0 +
                        FqElem::make(C.k, 3) * r0 * r0;
            mult = (c2.is_zero() && c1.is_zero()) ? 3 : 2;
        }

        if (mult == 1) {
            rd.kodaira = {KodairaType::I0star, 0};
            rd.tamagawa = 1 + static_cast<long>(fq_small_roots(C.k, P).size());
            return {rd, E};
        }

        if (mult == 2) {
            E.translate(pi * C.lift(r0), QuadElem::from_rat(Rat(0), tag));
            // I_m* subprocedure
            long m = 1;
            QuadElem mx = pi * pi, my = pi * pi;
            for (;;) {
                FqElem b = C.res(E.a3 / my);
                FqElem c = C.res(E.a6 / (mx * my));
                // double root of Y^2 + bY - c ?
                bool dbl;
                FqElem root = C.kzero();
                if (C.char2()) {
                    dbl = b.is_zero();
                    if (dbl && !fq_sqrt(c, root))
                        throw internal_error("tate: char-2 sqrt in I_m*");
                } else {
                    FqElem disc = b * b + FqElem::make(C.k, 4) * c;
                    dbl = disc.is_zero();
                    if (dbl) root = -b * FqElem::make(C.k, 2).inv();
                }
                if (!dbl) {
                    rd.kodaira = {KodairaType::Instar, m};
                    rd.tamagawa = splits(C, b, c) ? 4 : 2;
                    return {rd, E};
                }
                E.translate(QuadElem::from_rat(Rat(0), tag), my * C.lift(root));
                my = my * pi;
                ++m;

                FqElem xa = C.res(E.a2 / pi);
                FqElem xb = C.res(E.a4 / (pi * mx));
                FqElem xc = C.res(E.a6 / (mx * my));
                // double root of xa X^2 + xb X + xc ?  (xa != 0 here)
                if (xa.is_zero()) throw internal_error("tate: degenerate I_m* quadratic");
                if (C.char2()) {
                    dbl = xb.is_zero();
                    if (dbl && !fq_sqrt(xc * xa.inv(), root))
                        throw internal_error("tate: char-2 sqrt in I_m*");
                } else {
                    FqElem disc = xb * xb - FqElem::make(C.k, 4) * xa * xc;
                    dbl = disc.is_zero();
                    if (dbl) root = -xb * (FqElem::make(C.k, 2) * xa).inv();
                }
                if (!dbl) {
                    rd.kodaira = {KodairaType::Instar, m};
                    // roots of the (monic-ized) quadratic in k
                    FqPoly q{xc, xb, xa};
                    rd.tamagawa = fq_small_roots(C.k, q).empty() ? 2 : 4;
                    return {rd, E};
                }
                E.translate(mx * C.lift(root), QuadElem::from_rat(Rat(0), tag));
                mx = mx * pi;
                ++m;
                if (m > 10000) throw internal_error("tate: I_m* loop runaway");
            }
        }

        // triple root
        E.translate(pi * C.lift(r0), QuadElem::from_rat(Rat(0), tag));
        {
            FqElem b = C.res(E.a3 / (pi * pi));
            FqElem c = C.res(E.a6 / (pi * pi * pi * pi));
            bool dbl;
            FqElem root = C.kzero();
            if (C.char2()) {
                dbl = b.is_zero();
                if (dbl && !fq_sqrt(c, root))
                    throw internal_error("tate: char-2 sqrt at IV*");
            } else {
                FqElem disc = b * b + FqElem::make(C.k, 4) * c;
                dbl = disc.is_zero();
                if (dbl) root = -b * FqElem::make(C.k, 2).inv();
            }
            if (!dbl) {
                rd.kodaira = {KodairaType::IVstar, 0};
                rd.tamagawa = splits(C, b, c) ? 3 : 1;
                return {rd, E};
            }
            E.translate(QuadElem::from_rat(Rat(0), tag), pi * pi * C.lift(root));
        }
        if (C.val(E.a4) < 4) {
            rd.kodaira = {KodairaType::IIIstar, 0};
            rd.tamagawa = 2;
            return {rd, E};
        }
        if (C.val(E.a6) < 6) {
            rd.kodaira = {KodairaType::IIstar, 0};
            rd.tamagawa = 1;
            return {rd, E};
        }
        // non-minimal: scale down and restart
        QuadElem inv_pi = QuadElem::from_rat(Rat(1), tag) / pi;
        E.rescale(inv_pi);
    }
    throw internal_error("tate: restart loop runaway");
}

// counts points of the reduced curve over a small residue field
long count_small(const Ctx& C, const LocalCurve& E) {
    FqElem a1 = C.res(E.a1), a2 = C.res(E.a2), a3 = C.res(E.a3),
           a4 = C.res(E.a4), a6 = C.res(E.a6);
    long n = 1;
    for (Int i = 0; i < C.k.p; ++i)
        for (Int j = 0; j < (C.k.f == 2 ? C.k.p : Int(1)); ++j)
            for (Int u = 0; u < C.k.p; ++u)
                for (Int v = 0; v < (C.k.f == 2 ? C.k.p : Int(1)); ++v) {
                    FqElem x = FqElem::make(C.k, i, j), y = FqElem::make(C.k, u, v);
                    FqElem lhs = y * y + a1 * x * y + a3 * y;
                    FqElem rhs = x * x * x + a2 * x * x + a4 * x + a6;
                    if (lhs == rhs) ++n;
                }
    return n;
}

GoodSubkind good_subkind_of(const Ctx& C, const LocalCurve& E) {
    const Int& p = C.F->p;
    if (C.k.q() <= 16) {
        long nq = count_small(C, E);
        Int a = C.k.q() + 1 - nq;
        return a % p == 0 ? GoodSubkind::supersingular : GoodSubkind::ordinary;
    }
    if (C.k.f == 1) {
        FqElem a1 = C.res(E.a1), a2 = C.res(E.a2), a3 = C.res(E.a3),
               a4 = C.res(E.a4), a6 = C.res(E.a6);
        long np = curve_count_fp(p, a1.c0, a2.c0, a3.c0, a4.c0, a6.c0);
        return is_supersingular(p, np) ? GoodSubkind::supersingular
                                       : GoodSubkind::ordinary;
    }
    // unramified odd p: coefficients reduce into the prime field
    if (!E.a1.is_rational() || !E.a2.is_rational() || !E.a3.is_rational() ||
        !E.a4.is_rational() || !E.a6.is_rational())
        throw internal_error("good_subkind: irrational model over unramified field");
    auto red = [&](const Rat& r) -> Int {
        Int inv;
        if (!mpz_invert(inv.get_mpz_t(), r.get_den().get_mpz_t(), p.get_mpz_t()))
            throw internal_error("good_subkind: non-integral coefficient");
        return ((r.get_num() * inv) % p + p) % p;
    };
    long np = curve_count_fp(p, red(E.a1.a), red(E.a2.a), red(E.a3.a),
                             red(E.a4.a), red(E.a6.a));
    return is_supersingular(p, np) ? GoodSubkind::supersingular
                                   : GoodSubkind::ordinary;
}

}  // namespace

ReductionData tate_reduction(const CurveQ& E, const LocalFieldDesc& F) {
    return tate_impl(E, F).rd;
}

ResidueCurveInfo residue_curve_info(const CurveQ& E, const LocalFieldDesc& F) {
    TateOutcome out = tate_impl(E, F);
    if (out.rd.kind != ReductionKind::good)
        throw input_error("residue_curve_info: reduction is not good");
    Ctx C{&F, F.residue_field(), F.uniformizer()};
    const LocalCurve& M = out.minimal;
    ResidueCurveInfo info;
    FqElem a1 = C.res(M.a1), a2 = C.res(M.a2), a3 = C.res(M.a3),
           a4 = C.res(M.a4), a6 = C.res(M.a6);
    if (C.k.q() <= 16) {
        long nq = count_small(C, M);
        info.count_fq = nq;
        info.count_fp = C.k.f == 1 ? nq : 0;
        if (C.k.f == 2 && a1.c1 == 0 && a2.c1 == 0 && a3.c1 == 0 &&
            a4.c1 == 0 && a6.c1 == 0) {
            // recover the prime-field count when the model is rational
            FqField kp = FqField::prime_field(F.p);
            long np = 1;
            for (Int x = 0; x < F.p; ++x)
                for (Int y = 0; y < F.p; ++y) {
                    FqElem fx = FqElem::make(kp, x), fy = FqElem::make(kp, y);
                    FqElem A1 = FqElem::make(kp, a1.c0), A2 = FqElem::make(kp, a2.c0),
                           A3 = FqElem::make(kp, a3.c0), A4 = FqElem::make(kp, a4.c0),
                           A6 = FqElem::make(kp, a6.c0);
                    if (fy * fy + A1 * fx * fy + A3 * fy ==
                        fx * fx * fx + A2 * fx * fx + A4 * fx + A6)
                        ++np;
                }
            info.count_fp = np;
        }
    } else if (C.k.f == 1) {
        info.count_fp = curve_count_fp(F.p, a1.c0, a2.c0, a3.c0, a4.c0, a6.c0);
        info.count_fq = info.count_fp;
    } else {
        if (!(a1.c1 == 0 && a2.c1 == 0 && a3.c1 == 0 && a4.c1 == 0 && a6.c1 == 0))
            throw internal_error("residue_curve_info: irrational reduced model");
        info.count_fp = curve_count_fp(F.p, a1.c0, a2.c0, a3.c0, a4.c0, a6.c0);
        info.count_fq = curve_count_fp2(F.p, info.count_fp);
    }
    Int aq = C.k.q() + 1 - info.count_fq;
    info.supersingular = aq % F.p == 0;
    info.two_torsion_dim = two_torsion_dim(C.k, a1, a2, a3, a4, a6);
    return info;
}

}  // namespace quadtwist
