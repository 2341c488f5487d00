#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "jacdet/modarith.hpp"
#include "jacdet/quintic.hpp"

using namespace jacdet;

TEST_CASE("quintic spec validation and reduction") {
    QuinticSpec s = make_quintic_spec(13, -1, 14, 4);
    CHECK(s.a == 12);
    CHECK(s.b == 1);
    CHECK(s.c == 4);

    CHECK_THROWS(make_quintic_spec(7, 1, 1, 1));   // p = 3 (mod 4)
    CHECK_THROWS(make_quintic_spec(9, 1, 1, 1));   // composite
    CHECK_THROWS(make_quintic_spec(13, 0, 1, 1));  // a = 0
    CHECK_THROWS(make_quintic_spec(13, 1, 13, 1));
    CHECK_THROWS(make_quintic_spec(13, 1, 1, 26));
}

TEST_CASE("quintic sums: frozen values") {
    // p = 5: x^5 = x, so the summand is chi(x^3 + 2x); all four nonzero
    // terms are non-residues
    CHECK(quintic_sum_Ap(make_quintic_spec(5, 1, 1, 1)) == -4);
    // vanishing instances of the two bivariate families at y = 1
    CHECK(quintic_sum_Ap(make_quintic_spec(17, 1, 10, 9)) == 0);
    CHECK(quintic_sum_Ap(make_quintic_spec(13, 1, 5, 5)) == 0);
    // (a^{-1} c)^{(p-1)/4} = 4^3 = 64 = -1 (mod 13) forces zero
    CHECK(quintic_sum_Ap(make_quintic_spec(13, 1, 1, 4)) == 0);
}

TEST_CASE("closed form for the quintic sum: frozen values") {
    CHECK(Ap_mod_formula(make_quintic_spec(5, 1, 1, 1)) == 1);  // -4 mod 5
    CHECK(Ap_mod_formula(make_quintic_spec(13, 1, 1, 4)) == 0);
}

TEST_CASE("closed form matches the quintic sum for every spec, p in {13, 17}") {
    for (uint32_t p : {13u, 17u}) {
        uint64_t e = (p - 1) / 4;
        for (uint32_t a = 1; a < p; ++a)
            for (uint32_t b = 1; b < p; ++b)
                for (uint32_t c = 1; c < p; ++c) {
                    QuinticSpec s = make_quintic_spec(p, a, b, c);
                    int64_t A = quintic_sum_Ap(s);
                    CHECK(A > -static_cast<int64_t>(p));
                    CHECK(A < static_cast<int64_t>(p));
                    CHECK((A % p + p) % p == Ap_mod_formula(s));
                    uint64_t r = pow_mod(mul_mod(inv_mod(a, p), c, p), e, p);
                    if (r == p - 1) CHECK(A == 0);
                }
    }
}

TEST_CASE("quintic summand is even, so the half-range sum doubles") {
    for (uint32_t p : {13u, 17u}) {
        std::mt19937 rng(20260814);
        std::uniform_int_distribution<uint32_t> d(1, p - 1);
        for (int trial = 0; trial < 40; ++trial) {
            uint32_t a = d(rng), b = d(rng), c = d(rng);
            int64_t half = 0;
            for (uint64_t x = 1; x <= (p - 1) / 2; ++x) {
                uint64_t x2 = mul_mod(x, x, p);
                uint64_t v = (mul_mod(a, mul_mod(x2, x2, p), p) + mul_mod(b, x2, p) + c) % p;
                half += jacobi(static_cast<int64_t>(x), p) *
                        jacobi(static_cast<int64_t>(v), p);
            }
            CHECK(quintic_sum_Ap(make_quintic_spec(p, a, b, c)) == 2 * half);
        }
    }
}

TEST_CASE("quartic sums: frozen values") {
    FieldCtx f5 = FieldCtx::fp(5);
    CHECK(quartic_sum_Bq(f5.one(), f5.one(), f5.zero(), f5) == -2);

    FieldCtx f13 = FieldCtx::fp(13);
    int64_t B = quartic_sum_Bq(f13.one(), f13.one(), f13.from_int(3), f13);
    CHECK((B % 13 + 13) % 13 == 1);  // -1 - g(3) = -1 - 11 = 1 (mod 13)
    CHECK(Bq_mod_formula(f13.one(), f13.one(), f13.from_int(3), f13) == f13.one());
}

TEST_CASE("quartic closed form matches the sum: exhaustive prime fields") {
    for (uint32_t p : {5u, 13u, 17u}) {
        FieldCtx ctx = FieldCtx::fp(p);
        for (uint32_t al = 1; al < p; ++al)
            for (uint32_t be = 1; be < p; ++be)
                for (uint32_t ga = 1; ga < p; ++ga) {
                    FqElem alpha = ctx.make(al, 0), beta = ctx.make(be, 0),
                           gamma = ctx.make(ga, 0);
                    CHECK(ctx.from_int(quartic_sum_Bq(alpha, beta, gamma, ctx)) ==
                          Bq_mod_formula(alpha, beta, gamma, ctx));
                }
    }
}

TEST_CASE("quartic closed form matches the sum: sampled extension fields") {
    for (uint32_t p : {3u, 5u}) {
        FieldCtx ctx = FieldCtx::fp2(p);
        std::vector<FqElem> elems = ctx.enumerate();
        std::mt19937 rng(777 + p);
        std::uniform_int_distribution<size_t> d(1, elems.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            FqElem alpha = elems[d(rng)], beta = elems[d(rng)], gamma = elems[d(rng)];
            CHECK(ctx.from_int(quartic_sum_Bq(alpha, beta, gamma, ctx)) ==
                  Bq_mod_formula(alpha, beta, gamma, ctx));
        }
    }
    FieldCtx f13 = FieldCtx::fp(13);
    CHECK_THROWS(Bq_mod_formula(f13.zero(), f13.one(), f13.one(), f13));
    CHECK_THROWS(Bq_mod_formula(f13.one(), f13.one(), f13.zero(), f13));
}

TEST_CASE("power-sum identity over F_q: direct cases") {
    FieldCtx f5 = FieldCtx::fp(5);
    FqRing r5{&f5};
    ExtensionSumCheck chk = extension_power_sum(poly_from_ints(r5, {3, 0, 1, 0, 1}), f5);
    CHECK(chk.pass);
    CHECK(chk.rhs == f5.from_int(-1));  // only c_4 = 1 contributes

    FieldCtx f7 = FieldCtx::fp(7);
    FqRing r7{&f7};
    chk = extension_power_sum(poly_from_ints(r7, {2}), f7);
    CHECK(chk.pass);
    CHECK(f7.is_zero(chk.lhs));

    FqPoly too_big;
    too_big.c.assign(10, f5.zero());
    too_big.c.push_back(f5.one());  // degree 10 > 2(p-1) = 8
    CHECK_THROWS(extension_power_sum(too_big, f5));
}

TEST_CASE("power-sum identity over F_q: random polynomials") {
    struct Layout {
        uint32_t p;
        int degree;
        bool ext;
        int trials;
    };
    for (const Layout& lay :
         {Layout{3, 4, true, 100}, Layout{5, 8, true, 100}, Layout{13, 24, false, 50}}) {
        FieldCtx ctx = lay.ext ? FieldCtx::fp2(lay.p) : FieldCtx::fp(lay.p);
        std::vector<FqElem> elems = ctx.enumerate();
        std::mt19937 rng(4242 + lay.p);
        std::uniform_int_distribution<size_t> d(0, elems.size() - 1);
        std::uniform_int_distribution<int> dd(0, lay.degree);
        for (int trial = 0; trial < lay.trials; ++trial) {
            FqPoly H;
            int deg = dd(rng);
            for (int i = 0; i <= deg; ++i) H.c.push_back(elems[d(rng)]);
            CHECK(extension_power_sum(H, ctx).pass);
        }
    }
}

TEST_CASE("power-sum identity over the cubic extension") {
    // x^2 and x^4 hit the two contributing coefficients at p = 3; x gives 0 = 0
    CHECK(extension_power_sum_cubic({{0, 0, 0}, {0, 0, 0}, {1, 0, 0}}, 3));
    CHECK(extension_power_sum_cubic({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {1, 0, 0}}, 3));
    CHECK(extension_power_sum_cubic({{0, 0, 0}, {1, 0, 0}}, 3));

    for (uint32_t p : {3u, 5u}) {
        std::mt19937 rng(99 + p);
        std::uniform_int_distribution<uint32_t> d(0, p - 1);
        std::uniform_int_distribution<size_t> dlen(1, 2 * p - 1);
        int trials = (p == 3) ? 60 : 20;
        for (int trial = 0; trial < trials; ++trial) {
            std::vector<std::array<uint32_t, 3>> H(dlen(rng));
            for (auto& c : H) c = {d(rng), d(rng), d(rng)};
            CHECK(extension_power_sum_cubic(H, p));
        }
    }

    std::vector<std::array<uint32_t, 3>> long_poly(6, {1, 0, 0});
    CHECK_THROWS(extension_power_sum_cubic(long_poly, 3));  // degree 5 > 4
}

TEST_CASE("gamma: canonical value and field choice") {
    GammaResult g = gamma_of(make_quintic_spec(13, 1, 1, 4));
    CHECK(g.ctx.degree() == 1);
    CHECK(g.sqrt_ac == g.ctx.make(2, 0));
    CHECK(g.gamma == g.ctx.make(3, 0));  // (1 + 4) / 32 = 5 * 6^{-1} = 3 (mod 13)

    GammaResult h = gamma_of(make_quintic_spec(13, 1, 1, 2));  // chi(2) = -1
    CHECK(h.ctx.degree() == 2);
    CHECK(h.sqrt_ac.a0 == 0);  // pure multiple of the adjoined root
    CHECK(h.sqrt_ac.a1 >= 1);
}

TEST_CASE("gamma satisfies (16 gamma - 2)^2 = b^2 / (ac) in either field") {
    uint32_t p = 13;
    for (uint32_t a = 1; a < p; ++a)
        for (uint32_t b = 1; b < p; ++b)
            for (uint32_t c = 1; c < p; ++c) {
                GammaResult g = gamma_of(make_quintic_spec(p, a, b, c));
                const FieldCtx& ctx = g.ctx;
                FqElem lhs = ctx.sub(ctx.mul(ctx.from_int(16), g.gamma), ctx.from_int(2));
                uint64_t rhs =
                    mul_mod(mul_mod(b, b, p), inv_mod(mul_mod(a, c, p), p), p);
                CHECK(ctx.mul(lhs, lhs) == ctx.from_int(static_cast<int64_t>(rhs)));
                CHECK((ctx.degree() == 1) ==
                      (jacobi(static_cast<int64_t>(mul_mod(a, c, p)), p) == 1));
            }
}

TEST_CASE("point-count criterion: exhaustive sweep at p = 13") {
    uint32_t p = 13;
    int met = 0, converse_misses = 0;
    for (uint32_t a = 1; a < p; ++a)
        for (uint32_t b = 1; b < p; ++b)
            for (uint32_t c = 1; c < p; ++c) {
                Theorem51Verdict v = theorem51_condition(make_quintic_spec(p, a, b, c));
                CHECK(v.implication_holds);
                CHECK(v.condition_met == v.g_vanishes);
                CHECK(v.N_mod_p == ((static_cast<int64_t>(v.q) + v.Bq) % p + p) % p);
                if (v.condition_met) {
                    ++met;
                    CHECK(v.Ap == 0);
                } else if (v.Ap == 0) {
                    ++converse_misses;
                }
            }
    // g has one root in F_169 \ F_13 up to conjugation, reached by exactly
    // two values of b for each of the 72 non-square products ac
    CHECK(met == 144);
    // the criterion is sufficient but not necessary
    CHECK(converse_misses > 0);
}

TEST_CASE("point-count criterion: frozen instances") {
    Theorem51Verdict v = theorem51_condition(make_quintic_spec(13, 1, 6, 2));
    CHECK(v.q == 169);
    CHECK(v.gamma == FieldCtx::fp2(13).make(5, 1));
    CHECK(v.condition_met);
    CHECK(v.g_vanishes);
    CHECK(v.Ap == 0);

    v = theorem51_condition(make_quintic_spec(13, 1, 7, 2));
    CHECK(v.condition_met);
    CHECK(v.gamma == FieldCtx::fp2(13).make(5, 12));
    CHECK(v.Ap == 0);

    // converse failure witness: the sum vanishes without the condition
    v = theorem51_condition(make_quintic_spec(13, 1, 1, 4));
    CHECK(v.q == 13);
    CHECK_FALSE(v.condition_met);
    CHECK_FALSE(v.g_vanishes);
    CHECK(v.Ap == 0);
}

TEST_CASE("bivariate sweeps: frozen vanishing tables") {
    for (int64_t v : bivariate_quintic_sweep(10, 9, 17)) CHECK(v == 0);
    for (int64_t v : bivariate_quintic_sweep(5, 5, 13)) CHECK(v == 0);
    for (int64_t v : bivariate_quintic_sweep(8, 18, 13)) CHECK(v == 0);

    CHECK_THROWS(bivariate_quintic_sweep(1, 1, 9));
    CHECK_THROWS(bivariate_quintic_sweep(1, 1, 2));
}

TEST_CASE("bivariate sweep columns agree with the univariate sums") {
    std::vector<int64_t> table = bivariate_quintic_sweep(5, 5, 13);
    REQUIRE(table.size() == 13);
    for (uint32_t y = 1; y < 13; ++y) {
        uint64_t b = mul_mod(5, y, 13), c = mul_mod(5, mul_mod(y, y, 13), 13);
        CHECK(table[y] == quintic_sum_Ap(make_quintic_spec(
                              13, 1, static_cast<int64_t>(b), static_cast<int64_t>(c))));
    }

    // the y = 0 column is a pure odd-power sum, hence always zero
    std::vector<int64_t> generic = bivariate_quintic_sweep(1, 1, 13);
    CHECK(generic[0] == 0);
    bool any_nonzero = false;
    for (int64_t v : generic) any_nonzero = any_nonzero || (v != 0);
    CHECK(any_nonzero);
}
