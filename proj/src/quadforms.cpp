#include "jacdet/quadforms.hpp"

#include <stdexcept>

namespace jacdet {

namespace {

uint64_t reduce_index(int64_t i, uint64_t n) {
    int64_t r = i % static_cast<int64_t>(n);
    if (r < 0) r += static_cast<int64_t>(n);
    return static_cast<uint64_t>(r);
}

// (i^2 + c*i*j + d*j^2) mod n in [0, n), overflow-safe for n < 2^63.
int64_t form_value(int64_t c, int64_t d, uint64_t i, uint64_t j, uint64_t n) {
    uint64_t cr = reduce_index(c, n), dr = reduce_index(d, n);
    unsigned __int128 v = static_cast<unsigned __int128>(i) * i;
    v += static_cast<unsigned __int128>(mul_mod(cr, i, n)) * j;
    v += static_cast<unsigned __int128>(mul_mod(dr, j, n)) * j;
    return static_cast<int64_t>(v % n);
}

}  // namespace

IntMatrix build_form_matrix(const FormDetSpec& spec) {
    uint64_t n = spec.n.n;
    if (n <= 1) throw std::invalid_argument("build_form_matrix: n > 1 required");
    uint64_t lo = (spec.kind == FormKind::punctured) ? 1 : 0;
    size_t dim = static_cast<size_t>(n - lo);
    IntMatrix m(dim, dim);
    for (uint64_t i = lo; i < n; ++i)
        for (uint64_t j = lo; j < n; ++j)
            m.at(i - lo, j - lo) = jacobi(form_value(spec.c, spec.d, i, j, n), n);
    return m;
}

BigInt form_det(const FormDetSpec& spec) { return det_exact(build_form_matrix(spec)); }

bool vanish_by_nonresidue(const FormDetSpec& spec) {
    if (spec.kind != FormKind::punctured)
        throw std::invalid_argument("vanish_by_nonresidue: punctured kind required");
    return jacobi(spec.d, spec.n.n) == -1;
}

RelationVerdict full_vs_punctured_relation(int64_t c, int64_t d, uint64_t p) {
    if (!is_prime_u64(p) || p % 2 == 0)
        throw std::invalid_argument("full_vs_punctured_relation: odd prime required");
    RelationVerdict v;
    v.applicable = (jacobi(d, p) == 1);
    if (!v.applicable) return v;
    OddModulus n = factorize_odd(p);
    v.punctured = form_det({c, d, n, FormKind::punctured});
    v.full = form_det({c, d, n, FormKind::full});
    __int128 disc = static_cast<__int128>(c) * c - static_cast<__int128>(4) * d;
    int64_t disc_mod = static_cast<int64_t>(disc % static_cast<int64_t>(p));
    v.divisor_case = (disc_mod == 0);
    if (!v.divisor_case) {
        v.exact_division = true;
        v.holds = (v.full == BigInt((p - 1) / 2) * v.punctured);
    } else {
        BigInt num = BigInt(1) - BigInt(p);
        num *= v.punctured;
        BigInt den = BigInt(p) - 2;
        v.exact_division = (num % den == 0);
        v.holds = v.exact_division && (v.full == num / den);
    }
    return v;
}

int64_t row_charsum(int64_t c, int64_t d, int64_t i, const OddModulus& n) {
    uint64_t mod = n.n;
    uint64_t ir = reduce_index(i, mod);
    int64_t acc = 0;
    for (uint64_t j = 0; j < mod; ++j) {
        int jj = jacobi(static_cast<int64_t>(j), mod);
        if (jj == 0) continue;
        acc += jj * jacobi(form_value(c, d, ir, j, mod), mod);
    }
    return acc;
}

int64_t charsum_crt_product(int64_t c, int64_t d, int64_t i, const OddModulus& n) {
    if (!n.squarefree)
        throw std::invalid_argument("charsum_crt_product: squarefree n required");
    int64_t prod = 1;
    for (const auto& [p, e] : n.factors) {
        prod *= row_charsum(c, d, i, factorize_odd(p));
        if (prod == 0) return 0;
    }
    return prod;
}

bool theorem12_identity(int64_t c, int64_t d, int64_t i, const OddModulus& n) {
    if (!n.squarefree)
        throw std::invalid_argument("theorem12_identity: squarefree n required");
    uint64_t mod = n.n;
    int64_t lhs = row_charsum(c, d, i, n);
    __int128 disc = static_cast<__int128>(c) * c - static_cast<__int128>(4) * d;
    int64_t disc_mod = static_cast<int64_t>(disc % static_cast<int64_t>(mod));
    uint64_t ir = reduce_index(i, mod);
    int64_t rhs = 0;
    for (uint64_t j = 0; j < mod; ++j) {
        int jj = jacobi(-static_cast<int64_t>(j), mod);
        if (jj == 0) continue;
        rhs += jj * jacobi(form_value(2 * c, disc_mod, ir, j, mod), mod);
    }
    return lhs == rhs;
}

bool lemma21_congruence(int64_t c, int64_t d, int64_t i, uint64_t p) {
    if (!is_prime_u64(p) || p % 2 == 0)
        throw std::invalid_argument("lemma21_congruence: odd prime required");
    uint64_t cr = reduce_index(c, p);
    if (cr == 0) throw std::invalid_argument("lemma21_congruence: p | c");
    uint64_t dr = reduce_index(d, p);
    uint64_t ir = reduce_index(i, p);

    int64_t lhs = row_charsum(c, d, i, factorize_odd(p));
    uint64_t lhs_mod = reduce_index(lhs, p);

    // t = d / (16 c^2) mod p
    uint64_t c2 = mul_mod(cr, cr, p);
    uint64_t t = mul_mod(dr, inv_mod(mul_mod(16 % p, c2, p), p), p);
    const auto& table = central_binom_table_modp(p);
    uint64_t sum = 0, tpow = 1;
    for (uint64_t k = 0; k < p; ++k) {
        sum = (sum + mul_mod(table[k], tpow, p)) % p;
        tpow = mul_mod(tpow, t, p);
    }
    int sign = jacobi(static_cast<int64_t>(mul_mod(cr, ir, p)), p);
    uint64_t rhs_mod = (sign == 0) ? 0 : (sign == 1 ? (p - sum % p) % p : sum % p);
    return lhs_mod == rhs_mod;
}

int64_t lemma33_closed_form(ClosedFormCase cs, int64_t i, uint64_t p) {
    if (!is_prime_u64(p) || p % 2 == 0)
        throw std::invalid_argument("lemma33_closed_form: odd prime required");
    int m;
    switch (cs) {
        case ClosedFormCase::c42_m2: m = 2; break;
        case ClosedFormCase::c32_m4: m = 4; break;
        case ClosedFormCase::c33_m3: m = 3; break;
        default: m = 7; break;
    }
    if (jacobi(-static_cast<int64_t>(m), p) != 1) return 0;
    auto rep = cornacchia(p, m);
    if (!rep)
        throw std::logic_error("lemma33_closed_form: representation missing despite residue condition");
    int64_t two_x = 2 * rep->x;
    int64_t ir = static_cast<int64_t>(reduce_index(i, p));
    switch (cs) {
        case ClosedFormCase::c42_m2: {
            int sign = (((p - 3) / 8) % 2 == 0) ? 1 : -1;
            return sign * jacobi(ir, p) * two_x;
        }
        case ClosedFormCase::c32_m4:
            return -jacobi(2 * ir, p) * two_x;
        case ClosedFormCase::c33_m3:
            return -jacobi(-ir, p) * two_x;
        default:
            return -jacobi(ir, p) * two_x;
    }
}

bool lemma32_cubic_transform(int64_t c, int64_t d, int64_t i, uint64_t p) {
    if (!is_prime_u64(p) || p % 2 == 0)
        throw std::invalid_argument("lemma32_cubic_transform: odd prime required");
    uint64_t dr = reduce_index(d, p);
    if (dr == 0) throw std::invalid_argument("lemma32_cubic_transform: p | d");
    uint64_t cr = reduce_index(c, p);
    uint64_t ir = reduce_index(i, p);

    uint64_t c3 = mul_mod(3 % p, cr, p);
    int64_t lhs = 0;
    for (uint64_t j = 0; j < p; ++j) {
        int jj = jacobi(static_cast<int64_t>(j), p);
        if (jj == 0) continue;
        uint64_t v = (mul_mod(ir, ir, p) + mul_mod(mul_mod(c3, ir, p), j, p) +
                      mul_mod(dr, mul_mod(j, j, p), p)) %
                     p;
        lhs += jj * jacobi(static_cast<int64_t>(v), p);
    }

    // x^3 - (3c^2 - d) x + c (2c^2 - d)
    uint64_t three_c2 = mul_mod(c3, cr, p);
    uint64_t two_c2 = mul_mod(mul_mod(2 % p, cr, p), cr, p);
    uint64_t a1 = (p - (three_c2 + p - dr) % p) % p;
    uint64_t a0 = mul_mod(cr, (two_c2 + p - dr) % p, p);
    int64_t cubic = 0;
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t v = (mul_mod(mul_mod(x, x, p), x, p) + mul_mod(a1, x, p) + a0) % p;
        cubic += jacobi(static_cast<int64_t>(v), p);
    }
    int64_t rhs = jacobi(static_cast<int64_t>(ir), p) * cubic;
    return lhs == rhs;
}

}  // namespace jacdet
