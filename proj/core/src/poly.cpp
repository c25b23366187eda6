#include "quadtwist/poly.hpp"

#include <cmath>
#include <complex>
#include <set>

namespace quadtwist {

void RatPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

Rat RatPoly::lead() const {
    if (c.empty()) throw internal_error("lead of zero polynomial");
    return c.back();
}

Rat RatPoly::operator()(const Rat& x) const {
    Rat v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c.size(), o.c.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (c.empty() || o.c.empty()) return RatPoly();
    std::vector<Rat> r(c.size() + o.c.size() - 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rat& s) const {
    if (s == 0) return RatPoly();
    std::vector<Rat> r = c;
    for (auto& v : r) v *= s;
    return RatPoly(std::move(r));
}

RatPoly RatPoly::derivative() const {
    if (c.size() <= 1) return RatPoly();
    std::vector<Rat> r(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * Rat(static_cast<long>(i));
    return RatPoly(std::move(r));
}

void RatPoly::divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw internal_error("polynomial division by zero");
    r = a;
    q = RatPoly();
    q.c.assign(a.c.size(), Rat(0));
    Rat inv_lead = Rat(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rat coef = r.lead() * inv_lead;
        q.c[shift] += coef;
        for (size_t i = 0; i < b.c.size(); ++i)
            r.c[i + shift] -= coef * b.c[i];
        r.trim();
    }
    q.trim();
}

bool RatPoly::exact_div(const RatPoly& a, const RatPoly& b, RatPoly& q) {
    RatPoly r;
    divmod(a, b, q, r);
    return r.is_zero();
}

RatPoly RatPoly::gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a = a * (Rat(1) / a.lead());
    return a;
}

RatPoly RatPoly::x() { return RatPoly({Rat(0), Rat(1)}); }
RatPoly RatPoly::constant(const Rat& v) { return RatPoly({v}); }

namespace {

// Clear denominators to a primitive integer polynomial.
std::vector<Int> integer_model(const RatPoly& p) {
    Int lcm = 1;
    for (const auto& v : p.c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> out(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) {
        Rat scaled = p.c[i] * Rat(lcm);
        scaled.canonicalize();
        out[i] = scaled.get_num();
    }
    Int g = 0;
    for (const auto& v : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& v : out) v /= g;
    return out;
}

std::vector<Int> divisors_of(const Int& n) {
    std::vector<Int> ds{1};
    for (const auto& [p, e] : factor(n).factors) {
        size_t sz = ds.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
        }
    }
    return ds;
}

}  // namespace

std::vector<Rat> rational_roots(const RatPoly& p) {
    if (p.is_zero()) throw input_error("rational_roots of zero polynomial");
    std::vector<Int> ic = integer_model(p);
    // Strip x | p(x) factors first.
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    std::set<Rat> roots;
    if (low > 0) roots.insert(Rat(0));
    if (low + 1 >= ic.size()) return {roots.begin(), roots.end()};
    Int a0 = abs(ic[low]), an = abs(ic.back());
    auto eval_zero = [&](const Rat& r) {
        Rat v = 0;
        for (size_t i = ic.size(); i-- > low;) v = v * r + Rat(ic[i]);
        return v == 0;
    };
    for (const Int& q : divisors_of(a0))
        for (const Int& d : divisors_of(an)) {
            Rat r(q, d);
            r.canonicalize();
            if (eval_zero(r)) roots.insert(r);
            if (eval_zero(-r)) roots.insert(-r);
        }
    return {roots.begin(), roots.end()};
}

namespace {

std::vector<std::complex<double>> numeric_roots(const std::vector<Int>& ic) {
    int n = static_cast<int>(ic.size()) - 1;
    std::vector<std::complex<double>> coef(ic.size());
    double lead = ic.back().get_d();
    for (size_t i = 0; i < ic.size(); ++i) coef[i] = ic[i].get_d() / lead;
    // Durand-Kerner
    std::vector<std::complex<double>> z(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc(1, 0);
    for (int i = 0; i < n; ++i) { z[i] = acc; acc *= seed; }
    auto eval = [&](std::complex<double> x) {
        std::complex<double> v = 0;
        for (int i = n; i >= 0; --i) v = v * x + coef[i];
        return v;
    };
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= z[i] - z[j];
            std::complex<double> delta = eval(z[i]) / den;
            z[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-13) break;
    }
    return z;
}

}  // namespace

std::vector<std::pair<Rat, Rat>> quadratic_factors(const RatPoly& p) {
    std::vector<std::pair<Rat, Rat>> out;
    if (p.degree() < 2) return out;
    std::vector<Int> ic = integer_model(p);
    size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    std::vector<Int> body(ic.begin() + low, ic.end());
    if (body.size() < 3) return out;

    auto z = numeric_roots(body);
    std::set<std::pair<Rat, Rat>> seen;
    RatPoly pp;
    pp.c.assign(body.size(), Rat(0));
    for (size_t i = 0; i < body.size(); ++i) pp.c[i] = Rat(body[i]);
    // Pair each root with every other (covers conjugates and double rational
    // roots); candidate trace/norm rounded to nearby rationals with small
    // denominator dividing the leading coefficient.
    long anl = std::min<long>(body.back().get_d() < 1e9 ? labs(static_cast<long>(body.back().get_d())) : 1, 1000000L);
    if (anl == 0) anl = 1;
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j) {
            std::complex<double> t = z[i] + z[j], m = z[i] * z[j];
            if (std::abs(t.imag()) > 1e-6 || std::abs(m.imag()) > 1e-6) continue;
            for (long den : {1L, 2L, anl}) {
                Rat tr(static_cast<long>(std::llround(t.real() * den)), den);
                Rat nm(static_cast<long>(std::llround(m.real() * den)), den);
                tr.canonicalize();
                nm.canonicalize();
                if (!seen.insert({tr, nm}).second) continue;
                RatPoly f({nm, -tr, Rat(1)});
                RatPoly q;
                if (RatPoly::exact_div(pp, f, q)) out.push_back({tr, nm});
            }
        }
    return out;
}

}  // namespace quadtwist
