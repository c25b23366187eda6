#include <algorithm>
#include <set>

#include "quadtwist/curves.hpp"
#include "quadtwist/fq.hpp"

namespace quadtwist {

namespace {

// Integral short model Y^2 = X^3 + A X + B isomorphic to E, with the scale u
// such that X = u^2 (x + b2/12) ... we use the standard (36x + 3b2, 216(2y +
// a1 x + a3)) map composed with a further t^2 stretch to clear denominators.
struct ShortModel {
    Int A, B;
    Rat t;  // total scale: X = t^2 * x', where x' is the c4/c6 model coord
    CurveQ E;
};

ShortModel integral_short_model(const CurveQ& E) {
    Rat A0 = Rat(-27) * E.c4();
    Rat B0 = Rat(-54) * E.c6();
    Int t = 1;
    mpz_lcm(t.get_mpz_t(), A0.get_den().get_mpz_t(), B0.get_den().get_mpz_t());
    Rat A1 = A0 * Rat(t) * Rat(t) * Rat(t) * Rat(t);
    Rat B1 = B0 * Rat(t) * Rat(t) * Rat(t) * Rat(t) * Rat(t) * Rat(t);
    A1.canonicalize();
    B1.canonicalize();
    if (A1.get_den() != 1 || B1.get_den() != 1)
        throw internal_error("integral_short_model: scaling failed");
    ShortModel M;
    M.A = A1.get_num();
    M.B = B1.get_num();
    M.t = Rat(t);
    M.E = E;
    return M;
}

// Map a point (X, Y) on the integral model back to E.
std::pair<Rat, Rat> model_to_curve(const ShortModel& M, const Rat& X, const Rat& Y) {
    Rat t2 = M.t * M.t;
    Rat Xc = X / t2, Yc = Y / (t2 * M.t);       // c4/c6 model: Y^2 = X^3 -27c4 X -54c6
    Rat x = (Xc - 3 * M.E.b2()) / 36;           // X = 36x + 3b2
    Rat y = (Yc / 216 - M.E.a1 * x - M.E.a3) / 2;  // Y = 216(2y + a1x + a3) / ...
    return {x, y};
}

std::vector<Int> square_divisor_roots(const Int& n) {
    // all y >= 0 with y^2 | n
    std::vector<Int> ys{1};
    for (const auto& [p, e] : factor(n).factors) {
        size_t sz = ys.size();
        Int pk = 1;
        for (unsigned k = 1; 2 * k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) ys.push_back(ys[i] * pk);
        }
    }
    return ys;
}

const Int kDummyD = -1;  // field tag for purely rational group-law work

QuadPoint rat_point(const Rat& x, const Rat& y) {
    return QuadPoint::affine(QuadElem::from_rat(x, kDummyD),
                             QuadElem::from_rat(y, kDummyD));
}

}  // namespace

TorsionQ torsion_over_q(const CurveQ& E) {
    if (E.discriminant() == 0)
        throw input_error("torsion_over_q: singular curve");
    ShortModel M = integral_short_model(E);
    CurveQ S = CurveQ::short_form(Rat(M.A), Rat(M.B));
    Int disc = Int(-16) * (4 * M.A * M.A * M.A + 27 * M.B * M.B);

    std::set<std::pair<Rat, Rat>> found;
    std::vector<Int> ys = square_divisor_roots(abs(disc));
    ys.push_back(0);
    for (const Int& y : ys) {
        RatPoly cubic({Rat(M.B) - Rat(y * y), Rat(M.A), Rat(0), Rat(1)});
        for (const Rat& xr : rational_roots(cubic)) {
            if (xr.get_den() != 1) continue;
            for (const Rat& yy : {Rat(y), Rat(-y)}) {
                QuadPoint P = rat_point(xr, yy);
                // torsion order on an elliptic curve over Q is at most 12
                if (point_order(S, P, 12))
                    found.insert(model_to_curve(M, xr, yy));
            }
        }
    }
    TorsionQ out;
    out.points.assign(found.begin(), found.end());
    out.order = static_cast<long>(found.size()) + 1;
    return out;
}

namespace {

Int rat_mod(const Rat& r, const Int& p) {
    Int den_inv;
    if (!mpz_invert(den_inv.get_mpz_t(), r.get_den().get_mpz_t(), p.get_mpz_t()))
        throw internal_error("rat_mod: denominator not invertible");
    return ((r.get_num() * den_inv) % p + p) % p;
}

// gcd of good-reduction point counts bounding #E(K)_tors
Int torsion_bound_k(const CurveQ& E, const Int& D) {
    Rat disc = E.discriminant();
    Int bad = disc.get_num() * disc.get_den() * D;
    Int g = 0;
    int used = 0;
    for (Int p = 5; used < 5; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        if (bad % p == 0) continue;
        if (padic_valuation(E.a4, p) < 0 || padic_valuation(E.a6, p) < 0) continue;
        long np = curve_count_fp(p, 0, 0, 0, rat_mod(E.a4, p), rat_mod(E.a6, p));
        Int count;
        int kro = kronecker_symbol(D, p);
        if (kro == 1) count = np;           // split: residue field F_p
        else count = curve_count_fp2(p, np); // inert: residue field F_{p^2}
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), count.get_mpz_t());
        ++used;
        if (g == 1) break;
    }
    return g == 0 ? Int(1) : g;
}

// roots of an integer/rational polynomial lying in K = Q(sqrt(D))
std::vector<QuadElem> roots_in_k(const RatPoly& p, const Int& D) {
    std::vector<QuadElem> out;
    for (const Rat& r : rational_roots(p))
        out.push_back(QuadElem::from_rat(r, D));
    for (const auto& [t, m] : quadratic_factors(p)) {
        // x^2 - t x + m with roots (t +- sqrt(t^2 - 4m)) / 2 in K
        Rat disc = t * t - 4 * m;
        if (disc == 0) continue;  // double rational root, already captured
        Rat ratio = disc / Rat(D);
        Rat s;
        if (!rational_sqrt(ratio, s)) continue;
        out.push_back(QuadElem(t / 2, s / 2, D));
        out.push_back(QuadElem(t / 2, -s / 2, D));
    }
    return out;
}

}  // namespace

TorsionK torsion_over_k(const CurveQ& E, const Int& D) {
    if (!E.is_short())
        throw input_error("torsion_over_k: curve must be in short Weierstrass form");
    if (E.discriminant() == 0)
        throw input_error("torsion_over_k: singular curve");
    if (D == 0 || D == 1 || !is_squarefree(D))
        throw input_error("torsion_over_k: D must be squarefree and != 0, 1");

    Int bound = torsion_bound_k(E, D);
    std::set<QuadPoint> pts{QuadPoint::zero()};

    // 2-torsion: y = 0, x a root of the cubic in K
    RatPoly cubic({E.a6, E.a4, Rat(0), Rat(1)});
    for (const auto& x0 : roots_in_k(cubic, D))
        pts.insert(QuadPoint::affine(x0, QuadElem::from_rat(Rat(0), D)));

    // higher torsion: x-roots of division polynomials for divisors of bound
    for (long m = 3; m <= 18; ++m) {
        if (bound % m != 0) continue;
        int eps;
        RatPoly pm = division_poly(E.a4, E.a6, m, eps);
        for (const auto& x0 : roots_in_k(pm, D)) {
            QuadElem fx = x0 * x0 * x0 +
                          QuadElem::from_rat(E.a4, D) * x0 +
                          QuadElem::from_rat(E.a6, D);
            QuadElem y0;
            if (!sqrt_in_field(fx, y0)) continue;
            for (const QuadPoint& P : {QuadPoint::affine(x0, y0),
                                       QuadPoint::affine(x0, -y0)}) {
                auto ord = point_order(E, P, 24);
                if (ord && bound % Int(*ord) == 0) pts.insert(P);
            }
        }
    }

    // close under addition
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<QuadPoint> cur(pts.begin(), pts.end());
        for (const auto& P : cur)
            for (const auto& Q : cur) {
                QuadPoint R = add(E, P, Q);
                if (pts.insert(R).second) grew = true;
                if (pts.size() > 64)
                    throw internal_error("torsion_over_k: closure runaway");
            }
    }

    TorsionK out;
    out.points.assign(pts.begin(), pts.end());
    out.order = static_cast<long>(pts.size());
    return out;
}

}  // namespace quadtwist
