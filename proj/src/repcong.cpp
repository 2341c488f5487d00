#include "jacdet/repcong.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "jacdet/modarith.hpp"
#include "jacdet/poly.hpp"

namespace jacdet {

ModP2 make_modp2(uint64_t p, const BigInt& v) {
    if (p < 3 || !is_prime_u64(p) || p % 2 == 0)
        throw std::invalid_argument("make_modp2: odd prime required");
    BigInt m = BigInt(p) * p;
    BigInt r = v % m;
    if (r < 0) r += m;
    return {p, r};
}

ModP2 modp2_inv(const ModP2& v) {
    IntModRing ring{BigInt(v.p) * v.p};
    return {v.p, ring.inv(v.value)};
}

namespace {

uint64_t isqrt_floor(uint64_t n) {
    uint64_t r = static_cast<uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
    while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Pick the sign of x satisfying the m-specific normalization.
int64_t normalize_x(uint64_t xa, int m) {
    int64_t x = static_cast<int64_t>(xa);
    switch (m) {
        case 2:
        case 4:
            return (((x % 4) + 4) % 4 == 1) ? x : -x;
        case 3:
            return (((x % 3) + 3) % 3 == 1) ? x : -x;
        case 7:
            return jacobi(x, 7) == 1 ? x : -x;
        default:
            throw std::invalid_argument("normalize_x: m must be one of 2,3,4,7");
    }
}

}  // namespace

std::optional<Representation> cornacchia(uint64_t p, int m) {
    if (m != 2 && m != 3 && m != 4 && m != 7)
        throw std::invalid_argument("cornacchia: m must be one of 2,3,4,7");
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw std::invalid_argument("cornacchia: odd prime required");
    if (p == static_cast<uint64_t>(m) || (m == 4 && p == 2))
        throw std::invalid_argument("cornacchia: p | m");
    int64_t neg_m = -static_cast<int64_t>(m);
    if (jacobi(neg_m, p) != 1) return std::nullopt;

    uint64_t a0 = static_cast<uint64_t>(((neg_m % static_cast<int64_t>(p)) + static_cast<int64_t>(p)) %
                                        static_cast<int64_t>(p));
    auto root = sqrt_mod_prime(a0, p);
    if (!root) throw std::logic_error("cornacchia: residue test and root extraction disagree");
    // descent wants the root in (p/2, p)
    uint64_t r = p - *root;
    if (r < *root) r = *root;
    uint64_t a = p, b = r;
    uint64_t limit = isqrt_floor(p);
    while (b > limit) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    uint64_t x = b;
    uint64_t rem = p - x * x;
    if (rem % static_cast<uint64_t>(m) != 0)
        throw std::logic_error("cornacchia: descent missed (unexpected for class number one)");
    uint64_t ysq = rem / static_cast<uint64_t>(m);
    uint64_t y = isqrt_floor(ysq);
    if (y * y != ysq)
        throw std::logic_error("cornacchia: descent missed (unexpected for class number one)");
    Representation rep;
    rep.p = p;
    rep.m = m;
    rep.x = normalize_x(x, m);
    rep.y = static_cast<int64_t>(y);
    rep.normalized = true;
    return rep;
}

ModP2 central_binom_sum(const ModP2& t) {
    BigInt mod = BigInt(t.p) * t.p;
    BigInt acc = 0;
    BigInt tpow = 1;
    // exact running products: b4 = C(4k,2k), b2 = C(2k,k)
    BigInt b4 = 1, b2 = 1;
    for (uint64_t k = 0; k < t.p; ++k) {
        if (k > 0) {
            // C(4k,2k)   = C(4k-4,2k-2) * (4k-3)(4k-2)(4k-1)(4k) / (2k-1)^2 (2k)^2
            // C(2k,k)    = C(2k-2,k-1)  * (2k-1)(2k) / k^2
            b4 *= BigInt(4 * k - 3) * (4 * k - 2) * (4 * k - 1) * (4 * k);
            b4 /= BigInt(2 * k - 1) * (2 * k - 1) * (2 * k) * (2 * k);
            b2 *= BigInt(2 * k - 1) * (2 * k);
            b2 /= BigInt(k) * k;
            tpow = (tpow * t.value) % mod;
        }
        acc = (acc + (b4 % mod) * (b2 % mod) % mod * tpow) % mod;
    }
    return {t.p, acc};
}

const std::vector<uint64_t>& central_binom_table_modp(uint64_t p) {
    static std::mutex mu;
    static std::map<uint64_t, std::vector<uint64_t>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw std::invalid_argument("central_binom_table_modp: odd prime required");
    std::vector<uint64_t> table;
    table.reserve(p);
    BigInt b4 = 1, b2 = 1;
    for (uint64_t k = 0; k < p; ++k) {
        if (k > 0) {
            b4 *= BigInt(4 * k - 3) * (4 * k - 2) * (4 * k - 1) * (4 * k);
            b4 /= BigInt(2 * k - 1) * (2 * k - 1) * (2 * k) * (2 * k);
            b2 *= BigInt(2 * k - 1) * (2 * k);
            b2 /= BigInt(k) * k;
        }
        table.push_back(static_cast<uint64_t>((b4 % p) * (b2 % p) % p));
    }
    return cache.emplace(p, std::move(table)).first->second;
}

bool lemma22_polycheck(uint64_t p) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
        throw std::invalid_argument("lemma22_polycheck: odd prime required");
    BigInt mod = (p == 3) ? BigInt(3) : BigInt(p) * p;
    IntModRing ring{mod};
    BigInt inv64 = ring.inv(ring.from_int(64));
    int eps = jacobi(-2, p);

    ZmPoly acc;
    ZmPoly one_minus_x = poly_from_ints(ring, {1, -1});
    ZmPoly omx_pow;  // (1-x)^k
    omx_pow.c = {ring.one()};
    BigInt b4 = 1, b2 = 1, inv64_pow = 1;
    for (uint64_t k = 0; k < p; ++k) {
        if (k > 0) {
            b4 *= BigInt(4 * k - 3) * (4 * k - 2) * (4 * k - 1) * (4 * k);
            b4 /= BigInt(2 * k - 1) * (2 * k - 1) * (2 * k) * (2 * k);
            b2 *= BigInt(2 * k - 1) * (2 * k);
            b2 /= BigInt(k) * k;
            omx_pow = poly_mul(ring, omx_pow, one_minus_x);
            inv64_pow = (inv64_pow * inv64) % mod;
        }
        BigInt w = (b4 % mod) * (b2 % mod) % mod * inv64_pow % mod;
        // term = w * (x^k - eps*(1-x)^k)
        ZmPoly xk;
        xk.c.assign(k + 1, ring.zero());
        xk.c[k] = ring.one();
        ZmPoly t = (eps == 1) ? poly_sub(ring, xk, omx_pow) : poly_add(ring, xk, omx_pow);
        acc = poly_add(ring, acc, poly_scale(ring, t, w));
    }
    return poly_deg(acc) == -1;
}

Lemma31Result lemma31_check(uint64_t p) {
    if (p <= 3 || !is_prime_u64(p))
        throw std::invalid_argument("lemma31_check: prime p > 3 required");
    Lemma31Result res;
    BigInt mod = BigInt(p) * p;
    ModP2 t = modp2_inv(make_modp2(p, 128));
    res.sum = central_binom_sum(t).value;
    res.residue_branch = (p % 8 == 1 || p % 8 == 3);
    if (!res.residue_branch) {
        res.expected = 0;
        res.pass = (res.sum == 0);
        return res;
    }
    res.rep = cornacchia(p, 2);
    if (!res.rep) throw std::logic_error("lemma31_check: representation missing for p = 1,3 (mod 8)");
    IntModRing ring{mod};
    BigInt two_x = ring.from_int(2 * res.rep->x);
    BigInt closed = ring.sub(two_x, ring.mul(BigInt(p), ring.inv(two_x)));
    if (((p + 5) / 8) % 2 == 1) closed = ring.neg(closed);
    res.expected = closed;
    res.pass = (res.sum == res.expected);
    return res;
}

}  // namespace jacdet
