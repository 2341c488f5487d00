#include "jacdet/quintic.hpp"

#include <stdexcept>

#include "jacdet/modarith.hpp"

namespace jacdet {

namespace {

// Coefficients of a base-field polynomial carried into (a possibly larger)
// context over the same prime.
FqPoly lift_base_poly(const FqPoly& p, const FieldCtx& ext) {
    FqPoly r;
    r.c.reserve(p.c.size());
    for (FqElem c : p.c) r.c.push_back(ext.make(c.a0, 0));
    return r;
}

uint32_t reduce_nonzero(int64_t v, uint32_t p, const char* what) {
    int64_t r = v % static_cast<int64_t>(p);
    if (r < 0) r += p;
    if (r == 0) throw std::invalid_argument(std::string(what) + " must be nonzero mod p");
    return static_cast<uint32_t>(r);
}

}  // namespace

QuinticSpec make_quintic_spec(uint32_t p, int64_t a, int64_t b, int64_t c) {
    if (!is_prime_u64(p) || p % 4 != 1)
        throw std::invalid_argument("make_quintic_spec: p must be a prime = 1 (mod 4)");
    return {p, reduce_nonzero(a, p, "a"), reduce_nonzero(b, p, "b"), reduce_nonzero(c, p, "c")};
}

int64_t quintic_sum_Ap(const QuinticSpec& spec) {
    uint64_t p = spec.p;
    int64_t sum = 0;
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t x2 = mul_mod(x, x, p);
        uint64_t x3 = mul_mod(x2, x, p);
        uint64_t x5 = mul_mod(x3, x2, p);
        uint64_t v = (mul_mod(spec.a, x5, p) + mul_mod(spec.b, x3, p) + mul_mod(spec.c, x, p)) % p;
        sum += jacobi(static_cast<int64_t>(v), p);
    }
    return sum;
}

uint32_t Ap_mod_formula(const QuinticSpec& spec) {
    uint64_t p = spec.p;
    uint64_t e = (p - 1) / 4;
    // C((p-1)/2, (p-1)/4) mod p
    uint64_t binom = 1;
    for (uint64_t i = 1; i <= e; ++i) {
        binom = mul_mod(binom, (p - 1) / 2 - e + i, p);
        binom = mul_mod(binom, inv_mod(i, p), p);
    }
    uint64_t be = pow_mod(spec.b, e, p);
    uint64_t aece = (pow_mod(spec.a, e, p) + pow_mod(spec.c, e, p)) % p;
    FieldCtx ctx = FieldCtx::fp(static_cast<uint32_t>(p));
    FqRing ring{&ctx};
    uint64_t z = mul_mod(mul_mod(spec.a, spec.c, p),
                         inv_mod(mul_mod(spec.b, spec.b, p), p), p);
    uint64_t fz = poly_eval(ring, build_f(ctx), ctx.make(static_cast<uint32_t>(z), 0)).a0;
    uint64_t prod = mul_mod(mul_mod(binom, be, p), mul_mod(aece, fz, p), p);
    return static_cast<uint32_t>((p - prod) % p);
}

int64_t quartic_sum_Bq(FqElem alpha, FqElem beta, FqElem gamma, const FieldCtx& ctx) {
    int64_t sum = 0;
    for (FqElem x : ctx.enumerate()) {
        FqElem x2 = ctx.mul(x, x);
        FqElem x4 = ctx.mul(x2, x2);
        sum += ctx.chi(ctx.add(ctx.add(ctx.mul(alpha, x4), ctx.mul(beta, x2)), gamma));
    }
    return sum;
}

FqElem Bq_mod_formula(FqElem alpha, FqElem beta, FqElem gamma, const FieldCtx& ctx) {
    if (ctx.is_zero(alpha) || ctx.is_zero(beta) || ctx.is_zero(gamma))
        throw std::invalid_argument("Bq_mod_formula: alpha, beta, gamma must be nonzero");
    FqRing ring{&ctx};
    FqPoly g = lift_base_poly(build_g(FieldCtx::fp(ctx.p())), ctx);
    FqElem z = ctx.mul(ctx.mul(alpha, gamma), ctx.inv(ctx.mul(beta, beta)));
    FqElem gpow = ctx.norm_power(poly_eval(ring, g, z));
    return ctx.sub(ctx.from_int(-ctx.chi(alpha)), ctx.mul(ctx.from_int(ctx.chi(beta)), gpow));
}

ExtensionSumCheck extension_power_sum(const FqPoly& H, const FieldCtx& ctx) {
    FqRing ring{&ctx};
    FqPoly h = H;
    poly_trim(ring, h);
    uint32_t p = ctx.p();
    if (poly_deg(h) > static_cast<int>(2 * (p - 1)))
        throw std::invalid_argument("extension_power_sum: degree exceeds 2(p-1)");
    ExtensionSumCheck out;
    out.lhs = ctx.zero();
    for (FqElem x : ctx.enumerate())
        out.lhs = ctx.add(out.lhs, ctx.norm_power(poly_eval(ring, h, x)));
    auto coef = [&](size_t k) { return k < h.c.size() ? h.c[k] : ctx.zero(); };
    out.rhs = ctx.neg(ctx.add(ctx.norm_power(coef(p - 1)), ctx.norm_power(coef(2 * (p - 1)))));
    out.pass = (out.lhs == out.rhs);
    return out;
}

namespace {

// F_p[t]/(t^3 + A t^2 + B t + C) with the lexicographically smallest
// irreducible (i.e. root-free) monic cubic.
struct CubicExt {
    uint64_t p;
    uint64_t A, B, C;
    using E = std::array<uint32_t, 3>;

    explicit CubicExt(uint32_t prime) : p(prime) {
        for (A = 0; A < p; ++A)
            for (B = 0; B < p; ++B)
                for (C = 0; C < p; ++C)
                    if (root_free()) return;
        throw std::logic_error("CubicExt: no irreducible cubic found");
    }

    bool root_free() const {
        for (uint64_t r = 0; r < p; ++r) {
            uint64_t v = (mul_mod(mul_mod(r, r, p), r + A, p) + mul_mod(B, r, p) + C) % p;
            if (v == 0) return false;
        }
        return true;
    }

    E add(E x, E y) const {
        return {static_cast<uint32_t>((x[0] + y[0]) % p), static_cast<uint32_t>((x[1] + y[1]) % p),
                static_cast<uint32_t>((x[2] + y[2]) % p)};
    }

    E neg(E x) const {
        return {static_cast<uint32_t>((p - x[0]) % p), static_cast<uint32_t>((p - x[1]) % p),
                static_cast<uint32_t>((p - x[2]) % p)};
    }

    E mul(E x, E y) const {
        uint64_t w[5] = {0, 0, 0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) w[i + j] = (w[i + j] + mul_mod(x[i], y[j], p)) % p;
        for (int k = 4; k >= 3; --k) {  // t^k = -(A t^(k-1) + B t^(k-2) + C t^(k-3))
            uint64_t v = w[k];
            w[k] = 0;
            w[k - 1] = (w[k - 1] + p - mul_mod(A, v, p) % p) % p;
            w[k - 2] = (w[k - 2] + p - mul_mod(B, v, p) % p) % p;
            w[k - 3] = (w[k - 3] + p - mul_mod(C, v, p) % p) % p;
        }
        return {static_cast<uint32_t>(w[0]), static_cast<uint32_t>(w[1]),
                static_cast<uint32_t>(w[2])};
    }

    E pow(E x, uint64_t e) const {
        E r = {1, 0, 0};
        while (e) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }
};

}  // namespace

bool extension_power_sum_cubic(const std::vector<std::array<uint32_t, 3>>& H, uint32_t p) {
    if (H.size() > 2 * static_cast<size_t>(p) - 1)
        throw std::invalid_argument("extension_power_sum_cubic: degree exceeds 2(p-1)");
    CubicExt ext(p);
    uint64_t e = 1 + static_cast<uint64_t>(p) + static_cast<uint64_t>(p) * p;
    CubicExt::E lhs = {0, 0, 0};
    CubicExt::E x = {0, 0, 0};
    for (uint32_t d2 = 0; d2 < p; ++d2)
        for (uint32_t d1 = 0; d1 < p; ++d1)
            for (uint32_t d0 = 0; d0 < p; ++d0) {
                x = {d0, d1, d2};
                CubicExt::E v = {0, 0, 0};
                for (size_t k = H.size(); k-- > 0;) v = ext.add(ext.mul(v, x), H[k]);
                lhs = ext.add(lhs, ext.pow(v, e));
            }
    auto coef = [&](size_t k) {
        return k < H.size() ? H[k] : CubicExt::E{0, 0, 0};
    };
    CubicExt::E rhs = ext.neg(ext.add(ext.pow(coef(p - 1), e), ext.pow(coef(2 * (p - 1)), e)));
    return lhs == rhs;
}

GammaResult gamma_of(const QuinticSpec& spec) {
    uint64_t p = spec.p;
    uint64_t ac = mul_mod(spec.a, spec.c, p);
    bool square = (jacobi(static_cast<int64_t>(ac), p) == 1);
    FieldCtx ctx = square ? FieldCtx::fp(spec.p) : FieldCtx::fp2(spec.p);
    FqElem s;
    if (square) {
        auto root = sqrt_mod_prime(ac, p);
        if (!root) throw std::logic_error("gamma_of: residue without a root");
        s = ctx.make(static_cast<uint32_t>(*root), 0);
    } else {
        s = sqrt_lift(static_cast<uint32_t>(ac), ctx);
    }
    FqElem num = ctx.add(ctx.from_int(spec.b), ctx.add(s, s));
    FqElem gamma = ctx.mul(num, ctx.inv(ctx.mul(ctx.from_int(16), s)));
    return {ctx, gamma, s};
}

Theorem51Verdict theorem51_condition(const QuinticSpec& spec) {
    GammaResult gr = gamma_of(spec);
    const FieldCtx& ctx = gr.ctx;
    Theorem51Verdict out;
    out.q = ctx.q();
    out.gamma = gr.gamma;
    out.Bq = quartic_sum_Bq(ctx.one(), ctx.one(), gr.gamma, ctx);
    int64_t p = spec.p;
    out.N_mod_p = ((static_cast<int64_t>(out.q) + out.Bq) % p + p) % p;
    out.condition_met = (out.N_mod_p == p - 1);
    FqRing ring{&ctx};
    FqPoly g = lift_base_poly(build_g(FieldCtx::fp(spec.p)), ctx);
    out.g_vanishes = ctx.is_zero(poly_eval(ring, g, gr.gamma));
    out.Ap = quintic_sum_Ap(spec);
    out.implication_holds = !out.condition_met || out.Ap == 0;
    return out;
}

std::vector<int64_t> bivariate_quintic_sweep(int64_t c1, int64_t c2, uint32_t p) {
    if (!is_prime_u64(p) || p == 2)
        throw std::invalid_argument("bivariate_quintic_sweep: p must be an odd prime");
    uint64_t c1r = ((c1 % p) + p) % p;
    uint64_t c2r = ((c2 % p) + p) % p;
    std::vector<int64_t> table(p, 0);
    for (uint64_t y = 0; y < p; ++y) {
        uint64_t y2 = mul_mod(y, y, p);
        int64_t sum = 0;
        for (uint64_t x = 0; x < p; ++x) {
            uint64_t x2 = mul_mod(x, x, p);
            uint64_t x3 = mul_mod(x2, x, p);
            uint64_t x5 = mul_mod(x3, x2, p);
            uint64_t v = (x5 + mul_mod(mul_mod(c1r, x3, p), y, p) +
                          mul_mod(mul_mod(c2r, x, p), y2, p)) %
                         p;
            sum += jacobi(static_cast<int64_t>(v), p);
        }
        table[y] = sum;
    }
    return table;
}

}  // namespace jacdet
