#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "jacdet/exactla.hpp"
#include "jacdet/finitefield.hpp"

namespace jacdet {

// Coefficient rings for the dense polynomial type.  Each ring exposes the
// same minimal vocabulary so the polynomial algorithms are written once.

struct FqRing {
    const FieldCtx* ctx;
    using Elem = FqElem;
    Elem zero() const { return ctx->zero(); }
    Elem one() const { return ctx->one(); }
    Elem add(Elem x, Elem y) const { return ctx->add(x, y); }
    Elem sub(Elem x, Elem y) const { return ctx->sub(x, y); }
    Elem neg(Elem x) const { return ctx->neg(x); }
    Elem mul(Elem x, Elem y) const { return ctx->mul(x, y); }
    Elem inv(Elem x) const { return ctx->inv(x); }
    bool is_zero(Elem x) const { return ctx->is_zero(x); }
    bool eq(Elem x, Elem y) const { return x == y; }
    Elem from_int(const BigInt& v) const {
        BigInt r = v % ctx->p();
        if (r < 0) r += ctx->p();
        return ctx->make(static_cast<uint32_t>(r), 0);
    }
};

// Z/m with arbitrary-precision residues in [0, m).
struct IntModRing {
    BigInt m;
    using Elem = BigInt;
    Elem zero() const { return 0; }
    Elem one() const { return from_int(1); }
    Elem add(const Elem& x, const Elem& y) const { return (x + y) % m; }
    Elem sub(const Elem& x, const Elem& y) const { return ((x - y) % m + m) % m; }
    Elem neg(const Elem& x) const { return (m - x % m) % m; }
    Elem mul(const Elem& x, const Elem& y) const { return (x * y) % m; }
    Elem inv(const Elem& x) const;
    bool is_zero(const Elem& x) const { return x == 0; }
    bool eq(const Elem& x, const Elem& y) const { return x == y; }
    Elem from_int(const BigInt& v) const {
        BigInt r = v % m;
        if (r < 0) r += m;
        return r;
    }
};

// Exact integers; used by oracles and coefficient construction.
struct BigIntRing {
    using Elem = BigInt;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(const Elem& x, const Elem& y) const { return x + y; }
    Elem sub(const Elem& x, const Elem& y) const { return x - y; }
    Elem neg(const Elem& x) const { return -x; }
    Elem mul(const Elem& x, const Elem& y) const { return x * y; }
    bool is_zero(const Elem& x) const { return x == 0; }
    bool eq(const Elem& x, const Elem& y) const { return x == y; }
    Elem from_int(const BigInt& v) const { return v; }
};

// Dense polynomial, coefficients low to high.  Normal form has no trailing
// zero coefficients; the zero polynomial is the empty vector (degree -1).
template <class R>
struct Poly {
    std::vector<typename R::Elem> c;
};

using FqPoly = Poly<FqRing>;
using ZmPoly = Poly<IntModRing>;
using ZPoly = Poly<BigIntRing>;

template <class R>
void poly_trim(const R& ring, Poly<R>& p) {
    while (!p.c.empty() && ring.is_zero(p.c.back())) p.c.pop_back();
}

template <class R>
int poly_deg(const Poly<R>& p) {
    return static_cast<int>(p.c.size()) - 1;
}

template <class R>
bool poly_eq(const R& ring, const Poly<R>& x, const Poly<R>& y) {
    Poly<R> a = x, b = y;
    poly_trim(ring, a);
    poly_trim(ring, b);
    if (a.c.size() != b.c.size()) return false;
    for (size_t i = 0; i < a.c.size(); ++i)
        if (!ring.eq(a.c[i], b.c[i])) return false;
    return true;
}

template <class R>
Poly<R> poly_add(const R& ring, const Poly<R>& x, const Poly<R>& y) {
    Poly<R> r;
    r.c.resize(std::max(x.c.size(), y.c.size()), ring.zero());
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < x.c.size()) r.c[i] = ring.add(r.c[i], x.c[i]);
        if (i < y.c.size()) r.c[i] = ring.add(r.c[i], y.c[i]);
    }
    poly_trim(ring, r);
    return r;
}

template <class R>
Poly<R> poly_neg(const R& ring, const Poly<R>& x) {
    Poly<R> r = x;
    for (auto& e : r.c) e = ring.neg(e);
    return r;
}

template <class R>
Poly<R> poly_sub(const R& ring, const Poly<R>& x, const Poly<R>& y) {
    return poly_add(ring, x, poly_neg(ring, y));
}

template <class R>
Poly<R> poly_mul(const R& ring, const Poly<R>& x, const Poly<R>& y) {
    Poly<R> r;
    if (x.c.empty() || y.c.empty()) return r;
    r.c.resize(x.c.size() + y.c.size() - 1, ring.zero());
    for (size_t i = 0; i < x.c.size(); ++i) {
        if (ring.is_zero(x.c[i])) continue;
        for (size_t j = 0; j < y.c.size(); ++j)
            r.c[i + j] = ring.add(r.c[i + j], ring.mul(x.c[i], y.c[j]));
    }
    poly_trim(ring, r);
    return r;
}

template <class R>
Poly<R> poly_scale(const R& ring, const Poly<R>& x, const typename R::Elem& s) {
    Poly<R> r = x;
    for (auto& e : r.c) e = ring.mul(e, s);
    poly_trim(ring, r);
    return r;
}

template <class R>
Poly<R> poly_pow(const R& ring, const Poly<R>& x, uint64_t e) {
    Poly<R> r;
    r.c = {ring.one()};
    Poly<R> b = x;
    while (e) {
        if (e & 1) r = poly_mul(ring, r, b);
        b = poly_mul(ring, b, b);
        e >>= 1;
    }
    return r;
}

template <class R>
Poly<R> poly_derivative(const R& ring, const Poly<R>& x) {
    Poly<R> r;
    if (x.c.size() <= 1) return r;
    r.c.resize(x.c.size() - 1, ring.zero());
    for (size_t i = 1; i < x.c.size(); ++i)
        r.c[i - 1] = ring.mul(x.c[i], ring.from_int(static_cast<int64_t>(i)));
    poly_trim(ring, r);
    return r;
}

template <class R>
typename R::Elem poly_eval(const R& ring, const Poly<R>& p, const typename R::Elem& x) {
    typename R::Elem acc = ring.zero();
    for (size_t i = p.c.size(); i-- > 0;)
        acc = ring.add(ring.mul(acc, x), p.c[i]);
    return acc;
}

template <class R>
Poly<R> poly_from_ints(const R& ring, const std::vector<int64_t>& cs) {
    Poly<R> r;
    r.c.reserve(cs.size());
    for (int64_t v : cs) r.c.push_back(ring.from_int(v));
    poly_trim(ring, r);
    return r;
}

// Binomial coefficient, exact.
BigInt binomial(uint64_t n, uint64_t k);

// Homogenization evaluated at (a, b): with n = deg P,
//   P*(a, b) = sum_s c_s a^(n-s) b^s   (so P*(x, y) = x^n P(y/x)).
template <class R>
typename R::Elem eval_homogeneous(const R& ring, const Poly<R>& p,
                                  const typename R::Elem& a, const typename R::Elem& b) {
    Poly<R> t = p;
    poly_trim(ring, t);
    if (t.c.empty()) return ring.zero();
    typename R::Elem acc = ring.zero();
    typename R::Elem bpow = ring.one();
    std::vector<typename R::Elem> apow(t.c.size(), ring.one());
    for (size_t i = 1; i < t.c.size(); ++i) apow[i] = ring.mul(apow[i - 1], a);
    size_t n = t.c.size() - 1;
    for (size_t s = 0; s <= n; ++s) {
        acc = ring.add(acc, ring.mul(t.c[s], ring.mul(apow[n - s], bpow)));
        bpow = ring.mul(bpow, b);
    }
    return acc;
}

// P_m(x, a) = sum_{k=0}^{m-1} C(2m, 2k+1) a^k x^(m-1-k); odd m.
// Satisfies 2x P_m(x^2, 1) = (x+1)^(2m) - (x-1)^(2m) over the integers.
template <class R>
Poly<R> build_Pm(const R& ring, unsigned m, const typename R::Elem& a) {
    if (m % 2 == 0) throw std::invalid_argument("build_Pm: m must be odd");
    Poly<R> r;
    r.c.resize(m, ring.zero());
    typename R::Elem apow = ring.one();
    for (unsigned k = 0; k < m; ++k) {
        r.c[m - 1 - k] = ring.mul(ring.from_int(binomial(2 * m, 2 * k + 1)), apow);
        apow = ring.mul(apow, a);
    }
    poly_trim(ring, r);
    return r;
}

// Q_m(x, a) = sum_{i=0}^{(m-1)/2} (m/(m-i)) C(m-i, i) (-a)^i x^((m-1)/2-i);
// odd m.  The coefficients m/(m-i) C(m-i, i) are integers.
template <class R>
Poly<R> build_Qm(const R& ring, unsigned m, const typename R::Elem& a) {
    if (m % 2 == 0) throw std::invalid_argument("build_Qm: m must be odd");
    unsigned h = (m - 1) / 2;
    Poly<R> r;
    r.c.resize(h + 1, ring.zero());
    typename R::Elem mapow = ring.one();  // (-a)^i
    for (unsigned i = 0; i <= h; ++i) {
        BigInt num = BigInt(m) * binomial(m - i, i);
        if (num % (m - i) != 0) throw std::logic_error("build_Qm: non-integral coefficient");
        r.c[h - i] = ring.mul(ring.from_int(num / (m - i)), mapow);
        mapow = ring.mul(mapow, ring.neg(a));
    }
    poly_trim(ring, r);
    return r;
}

// Dickson polynomial D_m(x, a) = x Q_m(x^2, a).
template <class R>
Poly<R> dickson_D(const R& ring, unsigned m, const typename R::Elem& a) {
    Poly<R> q = build_Qm(ring, m, a);
    Poly<R> r;
    r.c.resize(2 * q.c.size(), ring.zero());
    for (size_t i = 0; i < q.c.size(); ++i) r.c[2 * i + 1] = q.c[i];
    poly_trim(ring, r);
    return r;
}

// Whether x -> P(x) permutes F_q.
bool is_permutation_polynomial(const FqPoly& p, const FieldCtx& ctx);

// Truncated hypergeometric-style series over F_p (base field contexts only):
//   f(z) = 1 + sum_{k=1}^{floor((p-1)/8)} prod_{j=0}^{k-1}
//              ((8j+1)(8j+5)) / (4(j+1)(4j+3)) z^k
//   g(z) = 1 + sum_{k=1}^{floor((p-1)/4)} ((4k-1)!! / (4^k (k!)^2)) z^k
FqPoly build_f(const FieldCtx& ctx);
FqPoly build_g(const FieldCtx& ctx);

// Residuals of the defining differential operators (zero for the series
// above):
//   for g: (4z - 16z^2) u'' + (4 - 32z) u' - 3u
//   for f: (16z - 64z^2) v'' + (12 - 112z) v' - 5v
FqPoly ode_residual_g(const FqPoly& u, const FieldCtx& ctx);
FqPoly ode_residual_f(const FqPoly& v, const FieldCtx& ctx);

// For p = 4n+1: -(2n)! (n!)^2 g(z) equals (16z-2)^n f(1/(16z-2)^2) expanded
// as a polynomial, i.e. sum_k f_k (16z-2)^(n-2k).  Checked over F_p.
bool check_fg_identity(uint32_t p);

// Textual rendering "c0 + c1*z + c2*z^2" with canonical residues; degree-2
// coefficients print as (a0+a1*w).  parse_poly round-trips render_poly.
std::string render_poly(const FqPoly& p, const FieldCtx& ctx, char var = 'z');
FqPoly parse_poly(const std::string& text, const FieldCtx& ctx);

}  // namespace jacdet
