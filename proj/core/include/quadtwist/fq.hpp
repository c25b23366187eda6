#pragma once

#include <vector>

#include "quadtwist/arith.hpp"

namespace quadtwist {

// F_q with q = p^f, f in {1, 2}.  For f = 2 the basis is {1, t} with
// t^2 = m1 * t + m0.
struct FqField {
    Int p;
    int f = 1;
    Int m0 = 0, m1 = 0;

    static FqField prime_field(Int p);
    // F_{p^2} = F_p[t]/(t^2 - s), s a non-square mod p (p odd).
    static FqField quadratic(Int p, Int s);
    // F_4 = F_2[t]/(t^2 + t + 1).
    static FqField f4();

    Int q() const { return f == 1 ? p : p * p; }
    bool operator==(const FqField& o) const {
        return p == o.p && f == o.f && m0 == o.m0 && m1 == o.m1;
    }
};

struct FqElem {
    Int c0, c1;
    FqField F;  // by value: elements stay valid independent of field lifetime

    static FqElem make(const FqField& F, Int c0, Int c1 = 0);
    bool is_zero() const { return c0 == 0 && c1 == 0; }
    bool operator==(const FqElem& o) const { return c0 == o.c0 && c1 == o.c1; }

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator-() const;
    FqElem operator*(const FqElem& o) const;
    FqElem inv() const;
    FqElem pow(Int e) const;
};

bool fq_is_square(const FqElem& a);
bool fq_sqrt(const FqElem& a, FqElem& out);
FqElem fq_cbrt_char3(const FqElem& a);  // Frobenius inverse, char 3 only

// Polynomials over F_q, index i = coefficient of X^i.
using FqPoly = std::vector<FqElem>;
int fq_distinct_root_count(const FqField& F, const FqPoly& f);
FqPoly fq_poly_gcd(const FqField& F, FqPoly a, FqPoly b);  // monic
FqPoly fq_poly_derivative(const FqField& F, const FqPoly& f);
// All roots of a polynomial of degree <= 3.
std::vector<FqElem> fq_small_roots(const FqField& F, const FqPoly& f);
// Whether Y^2 + b Y - c has a root in F_q; sets a root when it does.
bool fq_quadratic_root(const FqElem& b, const FqElem& c, FqElem& out);

// Point count of a (possibly long) Weierstrass curve over F_p, and the
// derived count over F_{p^2} via the trace of Frobenius.
long curve_count_fp(const Int& p, const Int& a1, const Int& a2, const Int& a3,
                    const Int& a4, const Int& a6);
Int curve_count_fp2(const Int& p, long count_fp);
bool is_supersingular(const Int& p, long count_fp);
// dim_2 of the 2-torsion of the reduced curve over F_q (0, 1, or 2).
int two_torsion_dim(const FqField& F, const FqElem& a1, const FqElem& a2,
                    const FqElem& a3, const FqElem& a4, const FqElem& a6);

}  // namespace quadtwist
