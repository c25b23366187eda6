#pragma once

#include "quadtwist/arith.hpp"

namespace quadtwist {

// K = Q(sqrt(d)), d squarefree and != 0, 1.
struct QuadField {
    Int d;
    explicit QuadField(Int dd);
    bool operator==(const QuadField& o) const { return d == o.d; }
};

// Element a + b*sqrt(d), exact rationals.
struct QuadElem {
    Rat a, b;
    Int d;  // the field's squarefree d

    QuadElem() : a(0), b(0), d(0) {}
    QuadElem(Rat aa, Rat bb, Int dd) : a(std::move(aa)), b(std::move(bb)), d(std::move(dd)) {
        a.canonicalize();  // two-argument mpq_class construction is not canonical
        b.canonicalize();
    }
    static QuadElem from_rat(const Rat& r, const Int& d) { return {r, Rat(0), d}; }
    static QuadElem sqrt_d(const Int& d) { return {Rat(0), Rat(1), d}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    QuadElem conj() const { return {a, -b, d}; }
    Rat norm() const { return a * a - Rat(d) * b * b; }
    Rat trace() const { return a + a; }

    QuadElem operator+(const QuadElem& o) const;
    QuadElem operator-(const QuadElem& o) const;
    QuadElem operator-() const { return {-a, -b, d}; }
    QuadElem operator*(const QuadElem& o) const;
    QuadElem operator/(const QuadElem& o) const;
    bool operator==(const QuadElem& o) const { return a == o.a && b == o.b && d == o.d; }
    bool operator!=(const QuadElem& o) const { return !(*this == o); }
};

// Square root of z inside K itself, if one exists.
bool sqrt_in_field(const QuadElem& z, QuadElem& out);

}  // namespace quadtwist
