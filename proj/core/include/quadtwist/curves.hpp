#pragma once

#include <optional>
#include <vector>

#include "quadtwist/poly.hpp"
#include "quadtwist/quadfield.hpp"

namespace quadtwist {

// Weierstrass curve y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
struct CurveQ {
    Rat a1, a2, a3, a4, a6;

    static CurveQ short_form(const Rat& a, const Rat& b);  // y^2 = x^3 + a x + b

    Rat b2() const { return a1 * a1 + 4 * a2; }
    Rat b4() const { return 2 * a4 + a1 * a3; }
    Rat b6() const { return a3 * a3 + 4 * a6; }
    Rat b8() const;
    Rat c4() const { return b2() * b2() - 24 * b4(); }
    Rat c6() const;
    Rat discriminant() const;
    bool is_short() const { return a1 == 0 && a2 == 0 && a3 == 0; }

    // Quadratic twist by squarefree D; requires short form.
    CurveQ twist(const Int& D) const;
};

// Point with coordinates in K = Q(sqrt(D)); O is the identity flag.
struct QuadPoint {
    bool infinity = true;
    QuadElem x, y;

    static QuadPoint zero() { return QuadPoint{}; }
    static QuadPoint affine(QuadElem xx, QuadElem yy) {
        QuadPoint p;
        p.infinity = false;
        p.x = std::move(xx);
        p.y = std::move(yy);
        return p;
    }
    bool operator==(const QuadPoint& o) const;
    bool operator<(const QuadPoint& o) const;  // ordering for set storage
};

bool on_curve(const CurveQ& E, const QuadPoint& P, const Int& D);
QuadPoint neg(const CurveQ& E, const QuadPoint& P);
QuadPoint add(const CurveQ& E, const QuadPoint& P, const QuadPoint& Q);
QuadPoint mul(const CurveQ& E, const Int& n, const QuadPoint& P);
QuadPoint sigma(const QuadPoint& P);                       // Galois conjugate
QuadPoint phi1(const CurveQ& E, const QuadPoint& P);       // P + sigma(P)
QuadPoint phi2(const CurveQ& E, const QuadPoint& P);       // P - sigma(P)
bool is_rational_point(const QuadPoint& P);
bool is_anti_rational_point(const CurveQ& E, const QuadPoint& P);  // sigma(P) = -P

// Order of a point if it is torsion within the budget, else nullopt.
std::optional<long> point_order(const CurveQ& E, const QuadPoint& P, long budget);

// Torsion of E(Q) by Lutz-Nagell on an integral short model (E must be, or
// be movable to, short form).
struct TorsionQ {
    long order = 1;
    std::vector<std::pair<Rat, Rat>> points;  // affine torsion points
};
TorsionQ torsion_over_q(const CurveQ& E);

// Torsion of E(K), K = Q(sqrt(D)), for short-form E: reduction bound at good
// unramified primes, then division polynomial root search in K.
struct TorsionK {
    long order = 1;
    std::vector<QuadPoint> points;  // all torsion points incl. O
};
TorsionK torsion_over_k(const CurveQ& E, const Int& D);

// Division polynomial psi_m for y^2 = x^3 + A x + B: returns p(x) with
// psi_m = p(x) * y^eps, eps in {0,1}.
RatPoly division_poly(const Rat& A, const Rat& B, long m, int& eps);

// Finitely generated subgroup data fed to the index computations.  Free
// generators must satisfy sigma(g) = g (fixed) or sigma(g) = -g (anti).
struct GeneratedSubgroup {
    CurveQ E;
    Int D = 0;
    std::vector<QuadPoint> torsion_gens;
    std::vector<QuadPoint> free_fixed;  // sigma g = g
    std::vector<QuadPoint> free_anti;   // sigma g = -g
};

// Closure of the torsion generators (bounded enumeration).
std::vector<QuadPoint> torsion_closure(const GeneratedSubgroup& G, long budget);

// Index (E(F) : N_D(F)) where N_D = phi1(E(K)), computed from the given
// generators: 2^{#free_fixed} corrections cancel and the answer is
// #(T cap E(Q)) / #phi1(T) restricted appropriately; see implementation.
Int index_e_mod_nd(const GeneratedSubgroup& G, long budget);

struct H1Check {
    Int lhs;   // computed #H^1(G, E(K)) = #(R_D / T_D)
    Int rhs;   // 2^{r_DF - r_F} * (E(F) : N_D(F))
    Int index; // (E(F) : N_D(F))
    bool match;
};
H1Check verify_h1_order(const GeneratedSubgroup& G, long budget);

long enum_budget_default();  // 10^5, overridable via QUADTWIST_ENUM_BUDGET

}  // namespace quadtwist
