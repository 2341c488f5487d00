#include "jacdet/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jacdet {

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t pow_mod(uint64_t x, uint64_t e, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    x %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, x, m);
        x = mul_mod(x, x, m);
        e >>= 1;
    }
    return r;
}

uint64_t inv_mod(uint64_t a, uint64_t m) {
    // Extended Euclid on signed 128-bit accumulators.
    __int128 t = 0, newt = 1;
    __int128 r = m, newr = a % m;
    while (newr != 0) {
        __int128 q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw std::invalid_argument("inv_mod: argument not invertible");
    if (t < 0) t += m;
    return static_cast<uint64_t>(t);
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // This base set is deterministic for all n < 2^64.
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

uint64_t pollard_rho(uint64_t n) {
    // Brent's cycle variant; n must be odd, composite, not a prime power hit
    // by trial division.
    for (uint64_t c = 1;; ++c) {
        auto f = [&](uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
        uint64_t x = 2, y = 2, d = 1;
        uint64_t q = 1;
        int steps = 0;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) { d = n; break; }
            q = mul_mod(q, diff, n);
            if (++steps % 64 == 0) {
                d = std::gcd(q, n);
                q = 1;
            }
        }
        if (d == 1) d = std::gcd(q, n);
        if (d != n && d != 1) return d;
    }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<uint64_t, unsigned>> factorize_u64(uint64_t n) {
    if (n == 0) throw std::invalid_argument("factorize_u64: zero input");
    std::vector<uint64_t> primes;
    for (uint64_t p = 2; p <= 1000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) { primes.push_back(p); n /= p; }
    }
    factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<uint64_t, unsigned>> out;
    for (uint64_t p : primes) {
        if (!out.empty() && out.back().first == p) ++out.back().second;
        else out.emplace_back(p, 1u);
    }
    return out;
}

OddModulus factorize_odd(uint64_t n) {
    if (n == 0 || n % 2 == 0)
        throw std::invalid_argument("factorize_odd: modulus must be odd and positive");
    OddModulus m;
    m.n = n;
    if (n > 1) m.factors = factorize_u64(n);
    m.squarefree = std::all_of(m.factors.begin(), m.factors.end(),
                               [](const auto& f) { return f.second == 1; });
    return m;
}

int jacobi(int64_t a, uint64_t n) {
    if (n == 0 || n % 2 == 0)
        throw std::invalid_argument("jacobi: modulus must be odd and positive");
    if (n == 1) return 1;
    int64_t am = a % static_cast<int64_t>(n);
    if (am < 0) am += static_cast<int64_t>(n);
    uint64_t x = static_cast<uint64_t>(am), y = n;
    int t = 1;
    while (x != 0) {
        while ((x & 1) == 0) {
            x >>= 1;
            uint64_t r = y & 7;
            if (r == 3 || r == 5) t = -t;
        }
        std::swap(x, y);
        if ((x & 3) == 3 && (y & 3) == 3) t = -t;
        x %= y;
    }
    return y == 1 ? t : 0;
}

std::optional<uint64_t> sqrt_mod_prime(uint64_t a, uint64_t p) {
    if (p < 2 || !is_prime_u64(p) || p == 2)
        throw std::invalid_argument("sqrt_mod_prime: p must be an odd prime");
    a %= p;
    if (a == 0) return 0;
    if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    uint64_t r;
    if (p % 4 == 3) {
        r = pow_mod(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks.
        uint64_t q = p - 1;
        int s = 0;
        while ((q & 1) == 0) { q >>= 1; ++s; }
        uint64_t z = 2;
        while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
        uint64_t m = s;
        uint64_t c = pow_mod(z, q, p);
        uint64_t t = pow_mod(a, q, p);
        r = pow_mod(a, (q + 1) / 2, p);
        while (t != 1) {
            uint64_t i = 0, tt = t;
            while (tt != 1) { tt = mul_mod(tt, tt, p); ++i; }
            uint64_t b = c;
            for (uint64_t j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
    }
    return std::min(r, p - r);
}

bool is_quadratic_residue(int64_t m, const OddModulus& n) {
    if (n.n == 1) return true;
    int64_t mm = m % static_cast<int64_t>(n.n);
    if (mm < 0) mm += static_cast<int64_t>(n.n);
    uint64_t mv = static_cast<uint64_t>(mm);
    if (std::gcd(mv, n.n) != 1) return false;
    std::vector<std::pair<uint64_t, uint64_t>> legs;
    for (auto [p, e] : n.factors) {
        auto r = sqrt_mod_prime(mv % p, p);
        if (!r) return false;
        uint64_t root = *r, pk = p;
        for (unsigned k = 1; k < e; ++k) {
            // Hensel step: root' = root - (root^2 - m) / (2 root) mod p^{k+1}.
            uint64_t pk1 = pk * p;
            uint64_t val = mul_mod(root, root, pk1);
            uint64_t diff = (val + pk1 - mv % pk1) % pk1;
            uint64_t step = mul_mod(diff, inv_mod((2 * root) % pk1, pk1), pk1);
            root = (root + pk1 - step) % pk1;
            pk = pk1;
        }
        legs.emplace_back(root, pk);
    }
    auto [x, mod] = crt_combine(legs);
    if (mul_mod(x, x, mod) != mv % mod)
        throw std::logic_error("is_quadratic_residue: certificate check failed");
    return true;
}

uint64_t power_sum(uint64_t p, uint64_t s) {
    if (!is_prime_u64(p)) throw std::invalid_argument("power_sum: p must be prime");
    return (s % (p - 1) == 0) ? p - 1 : 0;
}

uint64_t factorial_half(uint64_t p) {
    if (!is_prime_u64(p) || p % 4 != 1)
        throw std::invalid_argument("factorial_half: p must be prime, p = 1 (mod 4)");
    uint64_t r = 1;
    for (uint64_t k = 2; k <= (p - 1) / 2; ++k) r = mul_mod(r, k, p);
    if (mul_mod(r, r, p) != p - 1)
        throw std::logic_error("factorial_half: square is not -1");
    return r;
}

std::pair<uint64_t, uint64_t> crt_combine(
    const std::vector<std::pair<uint64_t, uint64_t>>& legs) {
    uint64_t x = 0, m = 1;
    for (auto [r, mi] : legs) {
        if (mi == 0) throw std::invalid_argument("crt_combine: zero modulus");
        if (std::gcd(m, mi) != 1)
            throw std::invalid_argument("crt_combine: moduli are not coprime");
        unsigned __int128 prod = static_cast<unsigned __int128>(m) * mi;
        if (prod > ~static_cast<uint64_t>(0))
            throw std::overflow_error("crt_combine: modulus exceeds 64 bits");
        uint64_t mod = static_cast<uint64_t>(prod);
        // x' = x + m * ((r - x) * m^{-1} mod mi)
        uint64_t diff = ((r % mi) + mi - (x % mi)) % mi;
        uint64_t t = mul_mod(diff, inv_mod(m % mi, mi), mi);
        x = x + m * t;
        m = mod;
    }
    return {x % m, m};
}

}  // namespace jacdet
