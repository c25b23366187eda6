#pragma once

#include <vector>

#include "quadtwist/arith.hpp"

namespace quadtwist {

// Dense univariate polynomial over Q, coefficient of x^i at index i.
struct RatPoly {
    std::vector<Rat> c;

    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim();
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    Rat lead() const;
    Rat operator()(const Rat& x) const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& s) const;
    bool operator==(const RatPoly& o) const { return c == o.c; }

    RatPoly derivative() const;
    // Quotient/remainder; divisor must be nonzero.
    static void divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
    // Returns true and sets q when b divides a exactly.
    static bool exact_div(const RatPoly& a, const RatPoly& b, RatPoly& q);
    static RatPoly gcd(RatPoly a, RatPoly b);  // monic gcd

    static RatPoly x();
    static RatPoly constant(const Rat& v);
};

// All rational roots of p (p nonzero), via the rational root theorem.
std::vector<Rat> rational_roots(const RatPoly& p);

// Monic quadratic factors x^2 - t x + m with t,m in Q dividing p exactly;
// used to pick out roots lying in quadratic fields.  Numeric root pairing
// proposes candidates, exact division confirms them.
std::vector<std::pair<Rat, Rat>> quadratic_factors(const RatPoly& p);

}  // namespace quadtwist
