#include "jacdet/finitefield.hpp"

#include <sstream>
#include <stdexcept>

#include "jacdet/modarith.hpp"

namespace jacdet {

uint32_t nonresidue(uint32_t p) {
    if (p < 3 || !is_prime_u64(p))
        throw std::invalid_argument("nonresidue: p must be an odd prime");
    for (uint32_t g = 2; g < p; ++g)
        if (jacobi(g, p) == -1) return g;
    throw std::logic_error("nonresidue: none found");
}

FieldCtx::FieldCtx(uint32_t p, int deg) : p_(p), deg_(deg) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw std::invalid_argument("FieldCtx: p must be an odd prime");
    g_ = nonresidue(p);
    q_ = deg == 1 ? p : static_cast<uint64_t>(p) * p;
}

FieldCtx FieldCtx::fp(uint32_t p) { return FieldCtx(p, 1); }
FieldCtx FieldCtx::fp2(uint32_t p) { return FieldCtx(p, 2); }

FqElem FieldCtx::make(uint32_t a0, uint32_t a1) const {
    if (a0 >= p_ || a1 >= p_)
        throw std::invalid_argument("FieldCtx::make: coordinate out of range");
    if (deg_ == 1 && a1 != 0)
        throw std::invalid_argument("FieldCtx::make: a1 must vanish in the base field");
    return {a0, a1};
}

FqElem FieldCtx::from_int(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return {static_cast<uint32_t>(r), 0};
}

FqElem FieldCtx::add(FqElem x, FqElem y) const {
    uint32_t a0 = x.a0 + y.a0;
    uint32_t a1 = x.a1 + y.a1;
    if (a0 >= p_) a0 -= p_;
    if (a1 >= p_) a1 -= p_;
    return {a0, a1};
}

FqElem FieldCtx::sub(FqElem x, FqElem y) const { return add(x, neg(y)); }

FqElem FieldCtx::neg(FqElem x) const {
    return {x.a0 ? p_ - x.a0 : 0, x.a1 ? p_ - x.a1 : 0};
}

FqElem FieldCtx::mul(FqElem x, FqElem y) const {
    uint64_t p = p_;
    if (deg_ == 1) {
        return {static_cast<uint32_t>((static_cast<uint64_t>(x.a0) * y.a0) % p), 0};
    }
    // (x0 + x1 w)(y0 + y1 w) = (x0 y0 + g x1 y1) + (x0 y1 + x1 y0) w
    uint64_t c0 = (static_cast<uint64_t>(x.a0) * y.a0 +
                   static_cast<uint64_t>(g_) % p * ((static_cast<uint64_t>(x.a1) * y.a1) % p)) % p;
    uint64_t c1 = (static_cast<uint64_t>(x.a0) * y.a1 +
                   static_cast<uint64_t>(x.a1) * y.a0) % p;
    return {static_cast<uint32_t>(c0), static_cast<uint32_t>(c1)};
}

FqElem FieldCtx::inv(FqElem x) const {
    if (is_zero(x)) throw std::invalid_argument("FieldCtx::inv: zero has no inverse");
    if (deg_ == 1) return {static_cast<uint32_t>(inv_mod(x.a0, p_)), 0};
    // 1/(a0 + a1 w) = (a0 - a1 w) / (a0^2 - g a1^2)
    uint64_t p = p_;
    uint64_t norm = (static_cast<uint64_t>(x.a0) * x.a0 % p +
                     p - static_cast<uint64_t>(g_) * (static_cast<uint64_t>(x.a1) * x.a1 % p) % p) % p;
    uint64_t ninv = inv_mod(norm, p);
    FqElem conj{x.a0, x.a1 ? p_ - x.a1 : 0};
    return mul(conj, {static_cast<uint32_t>(ninv), 0});
}

FqElem FieldCtx::pow(FqElem x, uint64_t e) const {
    FqElem r = one(), b = x;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

int FieldCtx::chi(FqElem x) const {
    if (is_zero(x)) return 0;
    FqElem v = pow(x, (q_ - 1) / 2);
    if (v == one()) return 1;
    if (v == neg(one())) return -1;
    throw std::logic_error("FieldCtx::chi: character value is not +-1");
}

std::optional<FqElem> FieldCtx::sqrt(FqElem x) const {
    if (is_zero(x)) return zero();
    auto canon = [&](FqElem r) {
        FqElem m = neg(r);
        if (m.a0 < r.a0 || (m.a0 == r.a0 && m.a1 < r.a1)) return m;
        return r;
    };
    if (deg_ == 1) {
        auto r = sqrt_mod_prime(x.a0, p_);
        if (!r) return std::nullopt;
        return FqElem{static_cast<uint32_t>(*r), 0};
    }
    if (x.a1 == 0) {
        if (jacobi(x.a0, p_) == 1) {
            auto r = sqrt_mod_prime(x.a0, p_);
            return FqElem{static_cast<uint32_t>(*r), 0};
        }
        // a0 is a base-field non-residue: root is y*w with y^2 = a0/g.
        uint64_t t = mul_mod(x.a0, inv_mod(g_, p_), p_);
        auto y = sqrt_mod_prime(t, p_);
        if (!y) throw std::logic_error("FieldCtx::sqrt: a0/g must be a residue");
        return canon(FqElem{0, static_cast<uint32_t>(*y)});
    }
    // General case: norm descent.  N(x) = a0^2 - g a1^2 is a base-field
    // square iff x is a square in F_{p^2}.
    uint64_t p = p_;
    uint64_t norm = (static_cast<uint64_t>(x.a0) * x.a0 % p +
                     p - static_cast<uint64_t>(g_) * (static_cast<uint64_t>(x.a1) * x.a1 % p) % p) % p;
    auto n0 = sqrt_mod_prime(norm, p);
    if (!n0) return std::nullopt;
    uint64_t half = inv_mod(2, p);
    uint64_t t = mul_mod((x.a0 + *n0) % p, half, p);
    if (jacobi(static_cast<int64_t>(t), p_) != 1)
        t = mul_mod((x.a0 + p - *n0) % p, half, p);
    auto x0 = sqrt_mod_prime(t, p);
    if (!x0 || *x0 == 0) throw std::logic_error("FieldCtx::sqrt: descent failed");
    uint64_t y0 = mul_mod(x.a1, inv_mod(mul_mod(2, *x0, p), p), p);
    FqElem r{static_cast<uint32_t>(*x0), static_cast<uint32_t>(y0)};
    if (!(mul(r, r) == x)) throw std::logic_error("FieldCtx::sqrt: root check failed");
    return canon(r);
}

FqElem FieldCtx::norm_power(FqElem z) const {
    if (deg_ == 1) return z;
    FqElem r = pow(z, static_cast<uint64_t>(p_) + 1);
    if (r.a1 != 0) throw std::logic_error("FieldCtx::norm_power: result not in base field");
    return r;
}

std::vector<FqElem> FieldCtx::enumerate() const {
    if (q_ > 2'000'000) throw std::invalid_argument("FieldCtx::enumerate: field too large");
    std::vector<FqElem> out;
    out.reserve(q_);
    if (deg_ == 1) {
        for (uint32_t a = 0; a < p_; ++a) out.push_back({a, 0});
    } else {
        for (uint32_t a0 = 0; a0 < p_; ++a0)
            for (uint32_t a1 = 0; a1 < p_; ++a1) out.push_back({a0, a1});
    }
    return out;
}

uint64_t FieldCtx::index_of(FqElem x) const {
    return deg_ == 1 ? x.a0 : static_cast<uint64_t>(x.a0) * p_ + x.a1;
}

std::string FieldCtx::to_string(FqElem x) const {
    std::ostringstream os;
    if (deg_ == 1) os << x.a0;
    else os << '(' << x.a0 << '+' << x.a1 << "*w)";
    return os.str();
}

FqElem sqrt_lift(uint32_t a, const FieldCtx& ext) {
    if (ext.degree() != 2)
        throw std::invalid_argument("sqrt_lift: context must be the quadratic extension");
    uint32_t p = ext.p();
    a %= p;
    if (a == 0) throw std::invalid_argument("sqrt_lift: argument must be nonzero");
    auto r = ext.sqrt(ext.make(a, 0));
    if (!r) throw std::logic_error("sqrt_lift: every base element is a square upstairs");
    // Canonical pick: base-field roots use the smaller representative; pure
    // w-multiples use a1 in [1, (p-1)/2].
    return *r;
}

}  // namespace jacdet
