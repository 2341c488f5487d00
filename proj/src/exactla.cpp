#include "jacdet/exactla.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "jacdet/modarith.hpp"

namespace jacdet {

IntMatrix::IntMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), e_(rows * cols) {
    if (rows == 0 || cols == 0)
        throw std::invalid_argument("IntMatrix: dimensions must be positive");
}

std::vector<uint64_t> crt_prime_ladder(size_t count) {
    static std::mutex mu;
    static std::vector<uint64_t> cache;
    std::lock_guard<std::mutex> lock(mu);
    uint64_t next = cache.empty() ? ((1ull << 62) - 1) : cache.back() - 2;
    while (cache.size() < count) {
        while (!is_prime_u64(next)) next -= 2;
        cache.push_back(next);
        next -= 2;
    }
    return std::vector<uint64_t>(cache.begin(), cache.begin() + count);
}

namespace {

uint64_t det_mod_prime(const IntMatrix& m, uint64_t p) {
    size_t n = m.rows();
    std::vector<uint64_t> a(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            BigInt r = m.at(i, j) % p;
            if (r < 0) r += p;
            a[i * n + j] = static_cast<uint64_t>(r);
        }
    uint64_t det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && a[piv * n + k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (size_t j = k; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
            det = p - det;
        }
        uint64_t pv = a[k * n + k];
        det = mul_mod(det, pv, p);
        uint64_t pinv = pow_mod(pv, p - 2, p);
        for (size_t i = k + 1; i < n; ++i) {
            uint64_t f = mul_mod(a[i * n + k], pinv, p);
            if (f == 0) continue;
            for (size_t j = k; j < n; ++j) {
                uint64_t sub = mul_mod(f, a[k * n + j], p);
                uint64_t& x = a[i * n + j];
                x = (x >= sub) ? x - sub : x + p - sub;
            }
        }
    }
    return det % p;
}

BigInt isqrt_ceil(const BigInt& x) {
    if (x <= 0) return 0;
    BigInt r = boost::multiprecision::sqrt(x);
    if (r * r < x) ++r;
    return r;
}

// det mod p^e via exact integer elimination on the reduced matrix.
uint64_t det_mod_prime_power(const IntMatrix& m, uint64_t pe) {
    size_t n = m.rows();
    IntMatrix red(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            BigInt r = m.at(i, j) % pe;
            if (r < 0) r += pe;
            red.at(i, j) = r;
        }
    BigInt d = det_bareiss(red) % pe;
    if (d < 0) d += pe;
    return static_cast<uint64_t>(d);
}

}  // namespace

BigInt det_bareiss(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("det_bareiss: matrix must be square");
    size_t n = m.rows();
    IntMatrix a = m;
    int sign = 1;
    BigInt prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && a.at(piv, k) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (size_t j = k; j < n; ++j) std::swap(a.at(piv, j), a.at(k, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                BigInt num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev;  // exact by the Bareiss identity
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : -a.at(n - 1, n - 1);
}

BigInt det_exact(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("det_exact: matrix must be square");
    size_t n = m.rows();
    // Hadamard bound from row norms.
    BigInt prod_sq = 1;
    for (size_t i = 0; i < n; ++i) {
        BigInt s = 0;
        for (size_t j = 0; j < n; ++j) s += m.at(i, j) * m.at(i, j);
        if (s == 0) return 0;  // zero row
        prod_sq *= s;
    }
    BigInt bound = isqrt_ceil(prod_sq);
    BigInt target = 2 * bound + 1;
    std::vector<uint64_t> primes;
    BigInt modulus = 1;
    size_t want = 1;
    while (modulus <= target) {
        primes = crt_prime_ladder(want);
        modulus = 1;
        for (uint64_t p : primes) modulus *= p;
        ++want;
    }
    if (modulus <= 2 * bound)
        throw std::logic_error("det_exact: CRT modulus does not clear the bound");
    BigInt x = 0, mprod = 1;
    for (uint64_t p : primes) {
        uint64_t r = det_mod_prime(m, p);
        // incremental CRT: x += mprod * ((r - x) / mprod mod p)
        BigInt diff = (BigInt(r) - x) % p;
        if (diff < 0) diff += p;
        uint64_t mp = static_cast<uint64_t>(mprod % p);
        uint64_t t = mul_mod(static_cast<uint64_t>(diff), inv_mod(mp, p), p);
        x += mprod * t;
        mprod *= p;
    }
    if (2 * x > mprod) x -= mprod;
    if (abs(x) > bound)
        throw std::logic_error("det_exact: result exceeds the Hadamard bound");
    if (n <= 64) {
        if (x != det_bareiss(m))
            throw std::logic_error("det_exact: modular and fraction-free routes disagree");
    }
    return x;
}

uint64_t det_mod(const IntMatrix& m, uint64_t mod) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("det_mod: matrix must be square");
    if (mod == 0) throw std::invalid_argument("det_mod: zero modulus");
    if (mod == 1) return 0;
    std::vector<std::pair<uint64_t, uint64_t>> legs;
    for (auto [p, e] : factorize_u64(mod)) {
        uint64_t pe = 1;
        for (unsigned k = 0; k < e; ++k) pe *= p;
        uint64_t r = (e == 1 && p > 2) ? det_mod_prime(m, p) : det_mod_prime_power(m, pe);
        legs.emplace_back(r, pe);
    }
    return crt_combine(legs).first;
}

RankResult rank_kernel(const IntMatrix& m) {
    size_t rows = m.rows(), cols = m.cols();
    IntMatrix a = m;
    BigInt prev = 1;
    size_t rank = 0;
    for (size_t k = 0; k < std::min(rows, cols); ++k) {
        // Full pivot search over the remaining block.
        size_t pr = rows, pc = cols;
        for (size_t i = k; i < rows && pr == rows; ++i)
            for (size_t j = k; j < cols; ++j)
                if (a.at(i, j) != 0) { pr = i; pc = j; break; }
        if (pr == rows) break;
        if (pr != k)
            for (size_t j = 0; j < cols; ++j) std::swap(a.at(pr, j), a.at(k, j));
        if (pc != k)
            for (size_t i = 0; i < rows; ++i) std::swap(a.at(i, pc), a.at(i, k));
        ++rank;
        for (size_t i = k + 1; i < rows; ++i) {
            for (size_t j = k + 1; j < cols; ++j) {
                BigInt num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev;
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return RankResult{rank, cols - rank, "fraction-free"};
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matmul: inner dimensions disagree");
    IntMatrix c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const BigInt& aik = a.at(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

bool is_zero_matrix(const IntMatrix& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

std::string dump_fixture(const IntMatrix& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << '\n';
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.at(i, j);
        }
        os << '\n';
    }
    return os.str();
}

IntMatrix load_fixture(std::istream& in) {
    size_t rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows == 0 || cols == 0)
        throw std::invalid_argument("load_fixture: bad header");
    IntMatrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
            if (!(in >> m.at(i, j)))
                throw std::invalid_argument("load_fixture: truncated entries");
    return m;
}

IntMatrix load_fixture_string(const std::string& s) {
    std::istringstream is(s);
    return load_fixture(is);
}

}  // namespace jacdet
