#include <doctest.h>

#include <numeric>
#include <random>

#include "jacdet/modarith.hpp"
#include "jacdet/poly.hpp"

using namespace jacdet;

namespace {

// Oracle: Pascal's triangle.
BigInt pascal(unsigned n, unsigned k) {
    std::vector<std::vector<BigInt>> row(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        row[i].assign(i + 1, 1);
        for (unsigned j = 1; j < i; ++j) row[i][j] = row[i - 1][j - 1] + row[i - 1][j];
    }
    return k <= n ? row[n][k] : 0;
}

// Oracle: Dickson polynomials by the defining recurrence
//   D_0 = 2, D_1 = x, D_m = x D_{m-1} - a D_{m-2}   (exact integers).
ZPoly dickson_recurrence(unsigned m, int64_t a) {
    BigIntRing zr;
    ZPoly d0 = poly_from_ints(zr, {2});
    ZPoly d1 = poly_from_ints(zr, {0, 1});
    ZPoly x = d1;
    for (unsigned i = 2; i <= m; ++i) {
        ZPoly next = poly_sub(zr, poly_mul(zr, x, d1), poly_scale(zr, d0, BigInt(a)));
        d0 = d1;
        d1 = next;
    }
    return m == 0 ? d0 : d1;
}

// Substitute x^2 for the variable: p(y) -> p(x^2).
template <class R>
Poly<R> spread_even(const R& ring, const Poly<R>& p) {
    Poly<R> r;
    r.c.resize(p.c.empty() ? 0 : 2 * p.c.size() - 1, ring.zero());
    for (size_t i = 0; i < p.c.size(); ++i) r.c[2 * i] = p.c[i];
    poly_trim(ring, r);
    return r;
}

FqPoly random_poly(const FieldCtx& ctx, int max_deg, std::mt19937& rng) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<uint32_t> dc(0, ctx.p() - 1);
    FqPoly r;
    int d = dd(rng);
    for (int i = 0; i <= d; ++i)
        r.c.push_back(ctx.degree() == 2 ? ctx.make(dc(rng), dc(rng))
                                        : ctx.make(dc(rng), 0));
    FqRing ring{&ctx};
    poly_trim(ring, r);
    return r;
}

}  // namespace

TEST_CASE("binomial matches Pascal's triangle") {
    for (unsigned n = 0; n <= 40; ++n)
        for (unsigned k = 0; k <= n + 2; ++k) CHECK(binomial(n, k) == pascal(n, k));
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(3, 7) == 0);
}

TEST_CASE("polynomial arithmetic over the integers") {
    BigIntRing zr;
    ZPoly one_plus = poly_from_ints(zr, {1, 1});
    ZPoly one_minus = poly_from_ints(zr, {1, -1});
    CHECK(poly_eq(zr, poly_mul(zr, one_plus, one_minus), poly_from_ints(zr, {1, 0, -1})));

    ZPoly pow5 = poly_pow(zr, one_plus, 5);
    REQUIRE(pow5.c.size() == 6);
    for (unsigned k = 0; k <= 5; ++k) CHECK(pow5.c[k] == binomial(5, k));

    ZPoly p = poly_from_ints(zr, {0, 0, 3, 0, 0, 1});  // 3z^2 + z^5
    CHECK(poly_eq(zr, poly_derivative(zr, p), poly_from_ints(zr, {0, 6, 0, 0, 5})));

    CHECK(poly_eval(zr, p, BigInt(2)) == 3 * 4 + 32);
    CHECK(poly_deg(poly_sub(zr, p, p)) == -1);
}

TEST_CASE("odd-binomial polynomial: frozen coefficients") {
    BigIntRing zr;
    // m = 3, a = 3: 6x^2 + 60x + 54
    CHECK(poly_eq(zr, build_Pm(zr, 3, BigInt(3)), poly_from_ints(zr, {54, 60, 6})));
    // m = 1: the constant 2
    CHECK(poly_eq(zr, build_Pm(zr, 1, BigInt(7)), poly_from_ints(zr, {2})));
    CHECK_THROWS(build_Pm(zr, 4, BigInt(1)));
}

TEST_CASE("odd-binomial polynomial solves (x+t)^2m - (x-t)^2m = 2tx P_m(x^2, t^2)") {
    BigIntRing zr;
    for (unsigned m : {1u, 3u, 5u, 7u, 9u}) {
        for (int64_t t : {1, 2, 3}) {
            ZPoly xpt = poly_from_ints(zr, {t, 1});
            ZPoly xmt = poly_from_ints(zr, {-t, 1});
            ZPoly lhs = poly_sub(zr, poly_pow(zr, xpt, 2 * m), poly_pow(zr, xmt, 2 * m));
            ZPoly pm = spread_even(zr, build_Pm(zr, m, BigInt(t) * t));
            ZPoly rhs = poly_mul(zr, poly_from_ints(zr, {0, 2 * t}), pm);
            CHECK(poly_eq(zr, lhs, rhs));
        }
    }
}

TEST_CASE("half-degree Dickson kernel: frozen coefficients") {
    BigIntRing zr;
    // Q_5(x, -1) = x^2 + 5x + 5
    CHECK(poly_eq(zr, build_Qm(zr, 5, BigInt(-1)), poly_from_ints(zr, {5, 5, 1})));
    // Q_3(x, 2) = x - 6, so D_3(x, 2) = x^3 - 6x
    CHECK(poly_eq(zr, build_Qm(zr, 3, BigInt(2)), poly_from_ints(zr, {-6, 1})));
    CHECK(poly_eq(zr, dickson_D(zr, 3, BigInt(2)), poly_from_ints(zr, {0, -6, 0, 1})));
    // D_5(x, -1) = x^5 + 5x^3 + 5x
    CHECK(poly_eq(zr, dickson_D(zr, 5, BigInt(-1)), poly_from_ints(zr, {0, 5, 0, 5, 0, 1})));
    CHECK_THROWS(build_Qm(zr, 6, BigInt(1)));
}

TEST_CASE("Dickson polynomials match the defining recurrence") {
    BigIntRing zr;
    for (unsigned m : {1u, 3u, 5u, 7u, 9u})
        for (int64_t a : {-2, -1, 1, 3})
            CHECK(poly_eq(zr, dickson_D(zr, m, BigInt(a)), dickson_recurrence(m, a)));
}

TEST_CASE("Dickson permutation criterion: gcd(m, q^2 - 1) = 1") {
    std::vector<FieldCtx> fields = {FieldCtx::fp(5), FieldCtx::fp(7), FieldCtx::fp(13),
                                    FieldCtx::fp2(5), FieldCtx::fp2(7)};
    for (const FieldCtx& ctx : fields) {
        FqRing ring{&ctx};
        for (unsigned m : {1u, 3u, 5u, 7u, 9u}) {
            bool expect = std::gcd<uint64_t>(m, ctx.q() * ctx.q() - 1) == 1;
            for (FqElem a : ctx.enumerate()) {
                if (ctx.is_zero(a)) continue;
                FqPoly d = dickson_D(ring, m, a);
                CHECK(is_permutation_polynomial(d, ctx) == expect);
            }
        }
    }
}

TEST_CASE("permutation detection on monomials") {
    FieldCtx f5 = FieldCtx::fp(5);
    FieldCtx f7 = FieldCtx::fp(7);
    FqRing r5{&f5}, r7{&f7};
    FqPoly cube5 = poly_from_ints(r5, {0, 0, 0, 1});
    FqPoly cube7 = poly_from_ints(r7, {0, 0, 0, 1});
    CHECK(is_permutation_polynomial(cube5, f5));        // gcd(3, 4) = 1
    CHECK_FALSE(is_permutation_polynomial(cube7, f7));  // 3 | 6
    FqPoly square7 = poly_from_ints(r7, {0, 0, 1});
    CHECK_FALSE(is_permutation_polynomial(square7, f7));
}

TEST_CASE("truncated series: frozen coefficients") {
    FieldCtx f13 = FieldCtx::fp(13);
    FieldCtx f5 = FieldCtx::fp(5);
    FqRing r13{&f13}, r5{&f5};
    CHECK(poly_eq(r13, build_f(f13), poly_from_ints(r13, {1, 8})));
    CHECK(poly_eq(r5, build_g(f5), poly_from_ints(r5, {1, 2})));
    CHECK(poly_eq(r13, build_g(f13), poly_from_ints(r13, {1, 4, 12, 7})));
    CHECK_THROWS(build_f(FieldCtx::fp2(13)));
    CHECK_THROWS(build_g(FieldCtx::fp2(5)));
}

TEST_CASE("g-series coefficients equal C(4k,2k) C(2k,k) / 16^k mod p") {
    for (uint32_t p : {3u, 5u, 7u, 13u, 17u, 29u, 37u, 61u}) {
        FieldCtx ctx = FieldCtx::fp(p);
        FqPoly g = build_g(ctx);
        uint64_t kmax = (p - 1) / 4;
        REQUIRE(g.c.size() == kmax + 1);
        for (uint64_t k = 0; k <= kmax; ++k) {
            BigInt num = binomial(4 * k, 2 * k) * binomial(2 * k, k);
            uint64_t nmod = static_cast<uint64_t>(num % p);
            uint64_t den = pow_mod(16 % p, k, p);
            uint64_t expect = mul_mod(nmod, inv_mod(den, p), p);
            CHECK(g.c[k].a0 == expect);
        }
    }
}

TEST_CASE("truncated series satisfy their differential operators mod p") {
    for (uint32_t p = 3; p <= 61; p += 2) {
        if (!is_prime_u64(p)) continue;
        FieldCtx ctx = FieldCtx::fp(p);
        FqRing ring{&ctx};
        CHECK(poly_deg(ode_residual_g(build_g(ctx), ctx)) == -1);
        if (p % 4 == 1) CHECK(poly_deg(ode_residual_f(build_f(ctx), ctx)) == -1);
    }
}

TEST_CASE("differential operator: frozen residual of u = z over F_13") {
    FieldCtx ctx = FieldCtx::fp(13);
    FqRing ring{&ctx};
    FqPoly u = poly_from_ints(ring, {0, 1});
    // (4 - 32z) * 1 - 3z = 4 - 35z = 4 + 4z (mod 13)
    CHECK(poly_eq(ring, ode_residual_g(u, ctx), poly_from_ints(ring, {4, 4})));
}

TEST_CASE("no low-degree polynomial other than 0 is annihilated") {
    // Any u with deg u < (p-1)/4 and zero residual must be 0: the leading
    // coefficient of the residual is -(4d+1)(4d+3) u_d with both factors < p.
    std::mt19937 rng(424243);
    for (uint32_t p : {13u, 17u, 29u}) {
        FieldCtx ctx = FieldCtx::fp(p);
        int n = static_cast<int>((p - 1) / 4);
        std::uniform_int_distribution<uint32_t> dc(0, p - 1);
        for (int trial = 0; trial < 60; ++trial) {
            FqPoly u;
            for (int i = 0; i < n; ++i) u.c.push_back(ctx.make(dc(rng), 0));
            FqRing ring{&ctx};
            poly_trim(ring, u);
            if (u.c.empty()) continue;
            CHECK(poly_deg(ode_residual_g(u, ctx)) >= 0);
        }
    }
}

TEST_CASE("series transformation identity holds for p = 1 (mod 4)") {
    for (uint32_t p : {5u, 13u, 17u, 29u, 37u, 41u, 53u, 61u, 73u, 89u, 97u, 101u})
        CHECK(check_fg_identity(p));
    CHECK_THROWS(check_fg_identity(7));
}

TEST_CASE("homogenized evaluation") {
    FieldCtx f7 = FieldCtx::fp(7);
    FqRing r7{&f7};
    FqPoly lin = poly_from_ints(r7, {3, 2});  // 3 + 2x, homogenizes to 3a + 2b
    CHECK(eval_homogeneous(r7, lin, f7.from_int(2), f7.from_int(5)) == f7.from_int(2));

    FieldCtx f13 = FieldCtx::fp(13);
    FqRing r13{&f13};
    std::mt19937 rng(777);
    for (int trial = 0; trial < 40; ++trial) {
        FqPoly p = random_poly(f13, 5, rng);
        if (p.c.empty()) continue;
        size_t n = p.c.size() - 1;
        for (uint32_t b = 0; b < 13; ++b) {
            FqElem bb = f13.from_int(b);
            // P*(1, b) = P(b)
            CHECK(eval_homogeneous(r13, p, f13.one(), bb) == poly_eval(r13, p, bb));
            // P*(0, b) = c_n b^n
            CHECK(eval_homogeneous(r13, p, f13.zero(), bb) ==
                  f13.mul(p.c[n], f13.pow(bb, n)));
            // P*(tb, t) = t^n P*(b, 1)
            FqElem t = f13.from_int(5);
            CHECK(eval_homogeneous(r13, p, f13.mul(t, bb), t) ==
                  f13.mul(f13.pow(t, n), eval_homogeneous(r13, p, bb, f13.one())));
        }
    }
}

TEST_CASE("render and parse round-trip") {
    FieldCtx f7 = FieldCtx::fp(7);
    FqRing r7{&f7};
    CHECK(render_poly(poly_from_ints(r7, {3, 0, 2}), f7) == "3 + 2*z^2");
    CHECK(render_poly(FqPoly{}, f7) == "0");
    CHECK(render_poly(poly_from_ints(r7, {0, 1}), f7, 'x') == "1*x");
    CHECK(poly_eq(r7, parse_poly("0", f7), FqPoly{}));
    CHECK(poly_eq(r7, parse_poly("x^2 + 1", f7), poly_from_ints(r7, {1, 0, 1})));
    CHECK(poly_eq(r7, parse_poly("z + 6*z", f7), FqPoly{}));  // coefficients add
    CHECK(poly_eq(r7, parse_poly("-3", f7), poly_from_ints(r7, {4})));

    FieldCtx f9 = FieldCtx::fp2(3);
    FqRing r9{&f9};
    FqPoly mixed;
    mixed.c = {f9.make(1, 2), f9.zero(), f9.make(0, 1)};
    std::string s = render_poly(mixed, f9);
    CHECK(s == "(1+2*w) + (0+1*w)*z^2");
    CHECK(poly_eq(r9, parse_poly(s, f9), mixed));

    std::mt19937 rng(20260814);
    for (const FieldCtx& ctx : {FieldCtx::fp(13), FieldCtx::fp2(3), FieldCtx::fp2(7)}) {
        FqRing ring{&ctx};
        for (int trial = 0; trial < 50; ++trial) {
            FqPoly p = random_poly(ctx, 6, rng);
            CHECK(poly_eq(ring, parse_poly(render_poly(p, ctx), ctx), p));
        }
    }
}

TEST_CASE("modular-integer coefficient ring") {
    IntModRing zm{BigInt(10)};
    CHECK(zm.inv(3) == 7);
    CHECK_THROWS(zm.inv(2));
    IntModRing p2{BigInt(9)};
    ZmPoly sq = poly_pow(p2, poly_from_ints(p2, {1, 1}), 2);
    CHECK(poly_eq(p2, sq, poly_from_ints(p2, {1, 2, 1})));
    ZmPoly big = poly_pow(p2, poly_from_ints(p2, {1, 1}), 3);
    CHECK(poly_eq(p2, big, poly_from_ints(p2, {1, 3, 3, 1})));
}
