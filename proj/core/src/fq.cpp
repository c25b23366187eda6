#include "quadtwist/fq.hpp"

#include <algorithm>

namespace quadtwist {

FqField FqField::prime_field(Int p) {
    if (!is_prime(p)) throw input_error("FqField: p must be prime");
    FqField F;
    F.p = std::move(p);
    return F;
}

FqField FqField::quadratic(Int p, Int s) {
    if (!is_prime(p) || p == 2) throw input_error("FqField: p must be an odd prime");
    FqField F;
    F.p = std::move(p);
    F.f = 2;
    F.m0 = ((s % F.p) + F.p) % F.p;  // t^2 = s
    F.m1 = 0;
    if (F.m0 == 0 || mpz_legendre(F.m0.get_mpz_t(), F.p.get_mpz_t()) != -1)
        throw input_error("FqField: s must be a non-square mod p");
    return F;
}

FqField FqField::f4() {
    FqField F;
    F.p = 2;
    F.f = 2;
    F.m0 = 1;  // t^2 = t + 1
    F.m1 = 1;
    return F;
}

FqElem FqElem::make(const FqField& F, Int v0, Int v1) {
    FqElem e;
    e.F = F;
    e.c0 = ((v0 % F.p) + F.p) % F.p;
    e.c1 = F.f == 2 ? ((v1 % F.p) + F.p) % F.p : Int(0);
    return e;
}

FqElem FqElem::operator+(const FqElem& o) const {
    return make(F, c0 + o.c0, c1 + o.c1);
}

FqElem FqElem::operator-(const FqElem& o) const {
    return make(F, c0 - o.c0, c1 - o.c1);
}

FqElem FqElem::operator-() const { return make(F, -c0, -c1); }

FqElem FqElem::operator*(const FqElem& o) const {
    if (F.f == 1) return make(F, c0 * o.c0, 0);
    Int t2 = c1 * o.c1;
    return make(F, c0 * o.c0 + t2 * F.m0, c0 * o.c1 + c1 * o.c0 + t2 * F.m1);
}

FqElem FqElem::pow(Int e) const {
    if (e < 0) return inv().pow(-e);
    FqElem acc = make(F, 1), base = *this;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

FqElem FqElem::inv() const {
    if (is_zero()) throw internal_error("FqElem: inverse of zero");
    return pow(F.q() - 2);
}

namespace {

std::vector<FqElem> all_elements(const FqField& F) {
    if (F.q() > 4096) throw internal_error("field too large to enumerate");
    std::vector<FqElem> out;
    for (Int i = 0; i < F.p; ++i) {
        if (F.f == 1) out.push_back(FqElem::make(F, i));
        else
            for (Int j = 0; j < F.p; ++j) out.push_back(FqElem::make(F, i, j));
    }
    return out;
}

}  // namespace

bool fq_is_square(const FqElem& a) {
    if (a.F.p == 2 || a.is_zero()) return true;
    FqElem e = a.pow((a.F.q() - 1) / 2);
    return e.c0 == 1 && e.c1 == 0;
}

bool fq_sqrt(const FqElem& a, FqElem& out) {
    const FqField& F = a.F;
    if (a.is_zero()) { out = a; return true; }
    if (F.p == 2) {
        out = F.f == 1 ? a : a * a;  // inverse of Frobenius
        return true;
    }
    if (!fq_is_square(a)) return false;
    Int q = F.q();
    if (q % 4 == 3) {
        out = a.pow((q + 1) / 4);
        return true;
    }
    // Tonelli-Shanks in F_q; deterministic scan for a non-square.
    Int s = q - 1;
    long e = 0;
    while (s % 2 == 0) { s /= 2; ++e; }
    FqElem n = FqElem::make(F, 2);
    for (Int k = 2;; ++k) {
        n = F.f == 1 ? FqElem::make(F, k) : FqElem::make(F, k, 1);
        if (!fq_is_square(n)) break;
        if (k > 4 * F.p) throw internal_error("fq_sqrt: no non-square found");
    }
    FqElem z = n.pow(s);
    FqElem x = a.pow((s + 1) / 2);
    FqElem b = a.pow(s);
    long m = e;
    while (!(b.c0 == 1 && b.c1 == 0)) {
        long i = 0;
        FqElem t = b;
        while (!(t.c0 == 1 && t.c1 == 0)) { t = t * t; ++i; }
        FqElem z2 = z;
        for (long j = 0; j < m - i - 1; ++j) z2 = z2 * z2;
        x = x * z2;
        z = z2 * z2;
        b = b * z;
        m = i;
    }
    out = x;
    return true;
}

FqElem fq_cbrt_char3(const FqElem& a) {
    if (a.F.p != 3) throw internal_error("fq_cbrt_char3: characteristic is not 3");
    return a.F.f == 1 ? a : a * a * a;  // inverse of the cube (Frobenius) map
}

namespace {

FqPoly pol_trim(FqPoly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

FqPoly pol_mul(const FqField& F, const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    FqPoly r(a.size() + b.size() - 1, FqElem::make(F, 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return pol_trim(r);
}

FqPoly pol_mod(const FqField&, FqPoly a, const FqPoly& m) {
    a = pol_trim(a);
    FqElem inv_lead = m.back().inv();
    while (a.size() >= m.size()) {
        FqElem c = a.back() * inv_lead;
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[i + shift] = a[i + shift] - c * m[i];
        a = pol_trim(a);
    }
    return a;
}

FqPoly pol_gcd(const FqField& F, FqPoly a, FqPoly b) {
    a = pol_trim(a);
    b = pol_trim(b);
    while (!b.empty()) {
        FqPoly r = pol_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        FqElem inv_lead = a.back().inv();
        for (auto& c : a) c = c * inv_lead;
    }
    return a;
}

// X^q mod m
FqPoly pol_xq_mod(const FqField& F, const FqPoly& m) {
    FqPoly x{FqElem::make(F, 0), FqElem::make(F, 1)};
    FqPoly acc{FqElem::make(F, 1)};
    FqPoly base = pol_mod(F, x, m);
    Int e = F.q();
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) acc = pol_mod(F, pol_mul(F, acc, base), m);
        e >>= 1;
        if (e > 0) base = pol_mod(F, pol_mul(F, base, base), m);
    }
    return acc;
}

// gcd(X^q - X, m): product of the distinct linear factors of m over F_q.
FqPoly split_part(const FqField& F, const FqPoly& m) {
    FqPoly xq = pol_xq_mod(F, m);
    if (xq.size() < 2) xq.resize(2, FqElem::make(F, 0));
    xq[1] = xq[1] - FqElem::make(F, 1);
    return pol_gcd(F, m, xq);
}

void roots_of_split(const FqField& F, const FqPoly& g, std::vector<FqElem>& out);

// g splits into distinct linear factors; peel them off.
void split_linear(const FqField& F, const FqPoly& g, std::vector<FqElem>& out) {
    if (g.size() <= 1) return;
    if (g.size() == 2) {
        out.push_back(-(g[0] * g[1].inv()));
        return;
    }
    if (F.q() <= 64) {
        for (const auto& e : all_elements(F)) {
            FqElem v = FqElem::make(F, 0);
            for (size_t i = g.size(); i-- > 0;) v = v * e + g[i];
            if (v.is_zero()) out.push_back(e);
        }
        return;
    }
    // odd characteristic equal-degree splitting with a deterministic shift scan
    for (Int r = 0;; ++r) {
        FqElem shift = F.f == 1 ? FqElem::make(F, r) : FqElem::make(F, r, r + 1);
        FqPoly lin{shift, FqElem::make(F, 1)};
        // (X + r)^{(q-1)/2} - 1 mod g
        FqPoly acc{FqElem::make(F, 1)};
        FqPoly base = pol_mod(F, lin, g);
        Int e = (F.q() - 1) / 2;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) acc = pol_mod(F, pol_mul(F, acc, base), g);
            e >>= 1;
            if (e > 0) base = pol_mod(F, pol_mul(F, base, base), g);
        }
        if (acc.empty()) acc.push_back(FqElem::make(F, 0));
        acc[0] = acc[0] - FqElem::make(F, 1);
        FqPoly h = pol_gcd(F, g, pol_trim(acc));
        if (h.size() > 1 && h.size() < g.size()) {
            split_linear(F, h, out);
            FqPoly quo;  // g / h
            {
                FqPoly a = g;
                FqElem inv_lead = h.back().inv();
                quo.assign(g.size(), FqElem::make(F, 0));
                while (a.size() >= h.size()) {
                    FqElem c = a.back() * inv_lead;
                    size_t shift2 = a.size() - h.size();
                    quo[shift2] = c;
                    for (size_t i = 0; i < h.size(); ++i)
                        a[i + shift2] = a[i + shift2] - c * h[i];
                    a = pol_trim(a);
                }
                quo = pol_trim(quo);
            }
            split_linear(F, quo, out);
            return;
        }
        if (r > 200) throw internal_error("split_linear: no splitter found");
    }
}

void roots_of_split(const FqField& F, const FqPoly& g, std::vector<FqElem>& out) {
    split_linear(F, g, out);
}

}  // namespace

FqPoly fq_poly_gcd(const FqField& F, FqPoly a, FqPoly b) {
    return pol_gcd(F, std::move(a), std::move(b));
}

FqPoly fq_poly_derivative(const FqField& F, const FqPoly& f) {
    FqPoly d;
    for (size_t i = 1; i < f.size(); ++i)
        d.push_back(FqElem::make(F, static_cast<long>(i)) * f[i]);
    return pol_trim(d);
}

int fq_distinct_root_count(const FqField& F, const FqPoly& f) {
    FqPoly g = pol_trim(f);
    if (g.empty()) throw internal_error("root count of zero polynomial");
    return static_cast<int>(split_part(F, g).size()) - 1;
}

std::vector<FqElem> fq_small_roots(const FqField& F, const FqPoly& f) {
    FqPoly g = pol_trim(f);
    std::vector<FqElem> out;
    if (g.size() <= 1) return out;
    FqPoly sp = split_part(F, g);
    roots_of_split(F, sp, out);
    return out;
}

bool fq_quadratic_root(const FqElem& b, const FqElem& c, FqElem& out) {
    const FqField& F = b.F;
    if (F.p != 2) {
        FqElem disc = b * b + FqElem::make(F, 4) * c;
        FqElem s;
        if (!fq_sqrt(disc, s)) return false;
        out = (s - b) * FqElem::make(F, 2).inv();
        return true;
    }
    for (const auto& y : all_elements(F)) {
        if ((y * y + b * y - c).is_zero()) { out = y; return true; }
    }
    return false;
}

long curve_count_fp(const Int& p, const Int& a1, const Int& a2, const Int& a3,
                    const Int& a4, const Int& a6) {
    if (p == 2) {
        long n = 1;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) {
                Int lhs = y * y + a1 * x * y + a3 * y;
                Int rhs = Int(x * x * x) + a2 * x * x + a4 * x + a6;
                if (((lhs - rhs) % 2 + 2) % 2 == 0) ++n;
            }
        return n;
    }
    long n = mpz_get_ui(p.get_mpz_t());
    long A1 = mpz_fdiv_ui(a1.get_mpz_t(), n), A2 = mpz_fdiv_ui(a2.get_mpz_t(), n);
    long A3 = mpz_fdiv_ui(a3.get_mpz_t(), n), A4 = mpz_fdiv_ui(a4.get_mpz_t(), n);
    long A6 = mpz_fdiv_ui(a6.get_mpz_t(), n);
    long total = n + 1;
    Int d;
    for (long x = 0; x < n; ++x) {
        // y^2 + (a1 x + a3) y = f(x); number of y is 1 + chi(disc)
        Int bx = (Int(A1) * x + A3) % n;
        Int fx = ((Int(x) * x % n) * x + Int(A2) * x % n * x + Int(A4) * x + A6) % n;
        d = (bx * bx + 4 * fx) % n;
        if (d != 0) total += mpz_legendre(d.get_mpz_t(), p.get_mpz_t());
    }
    return total;
}

Int curve_count_fp2(const Int& p, long count_fp) {
    Int a = p + 1 - count_fp;
    return p * p + 1 - (a * a - 2 * p);
}

bool is_supersingular(const Int& p, long count_fp) {
    Int a = p + 1 - count_fp;
    return a % p == 0;
}

int two_torsion_dim(const FqField& F, const FqElem& a1, const FqElem& a2,
                    const FqElem& a3, const FqElem& a4, const FqElem& a6) {
    if (F.p == 2) {
        long cnt = 0;
        for (const auto& x : all_elements(F))
            for (const auto& y : all_elements(F)) {
                if (!(y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6)).is_zero())
                    continue;
                if ((a1 * x + a3).is_zero()) ++cnt;  // P == -P
            }
        if (cnt == 0) return 0;
        if (cnt == 1) return 1;
        if (cnt == 3) return 2;
        throw internal_error("two_torsion_dim: impossible 2-torsion count");
    }
    FqElem b2 = a1 * a1 + FqElem::make(F, 4) * a2;
    FqElem b4 = FqElem::make(F, 2) * a4 + a1 * a3;
    FqElem b6 = a3 * a3 + FqElem::make(F, 4) * a6;
    FqPoly g{b6, FqElem::make(F, 2) * b4, b2, FqElem::make(F, 4)};
    int r = fq_distinct_root_count(F, g);
    if (r == 0) return 0;
    if (r == 1) return 1;
    if (r == 3) return 2;
    throw internal_error("two_torsion_dim: inseparable division polynomial");
}

}  // namespace quadtwist
