#include "quadtwist/quadfield.hpp"

namespace quadtwist {

QuadField::QuadField(Int dd) : d(std::move(dd)) {
    if (d == 0 || d == 1)
        throw input_error("QuadField: d must be != 0, 1");
    if (!is_squarefree(d))
        throw input_error("QuadField: d must be squarefree");
}

namespace {
void check_same(const QuadElem& x, const QuadElem& y) {
    if (x.d != y.d) throw internal_error("QuadElem: mixed fields");
}
}  // namespace

QuadElem QuadElem::operator+(const QuadElem& o) const {
    check_same(*this, o);
    return {a + o.a, b + o.b, d};
}

QuadElem QuadElem::operator-(const QuadElem& o) const {
    check_same(*this, o);
    return {a - o.a, b - o.b, d};
}

QuadElem QuadElem::operator*(const QuadElem& o) const {
    check_same(*this, o);
    return {a * o.a + Rat(d) * b * o.b, a * o.b + b * o.a, d};
}

QuadElem QuadElem::operator/(const QuadElem& o) const {
    check_same(*this, o);
    Rat n = o.norm();
    if (n == 0) throw internal_error("QuadElem: division by zero");
    QuadElem num = *this * o.conj();
    return {num.a / n, num.b / n, d};
}

bool sqrt_in_field(const QuadElem& z, QuadElem& out) {
    const Int& d = z.d;
    if (z.is_zero()) { out = QuadElem(Rat(0), Rat(0), d); return true; }
    if (z.b == 0) {
        // u^2 + d v^2 = a, 2uv = 0: either a rational square or a/d one.
        Rat s;
        if (rational_sqrt(z.a, s)) { out = QuadElem(s, Rat(0), d); return true; }
        if (rational_sqrt(z.a / Rat(d), s)) { out = QuadElem(Rat(0), s, d); return true; }
        return false;
    }
    // (u + v sqrt d)^2 = z: u^2 + d v^2 = a, 2uv = b.  Then u^2 solves
    // t^2 - a t + d b^2/4 = 0, so needs N = a^2 - d b^2 a rational square.
    Rat n = z.norm(), sn;
    if (!rational_sqrt(n, sn)) return false;
    for (const Rat& t : {Rat((z.a + sn) / 2), Rat((z.a - sn) / 2)}) {
        Rat u;
        if (t != 0 && rational_sqrt(t, u) && u != 0) {
            Rat v = z.b / (2 * u);
            QuadElem cand(u, v, d);
            if (cand * cand == z) { out = cand; return true; }
        }
    }
    return false;
}

}  // namespace quadtwist
