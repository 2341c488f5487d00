#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace jacdet {

// An odd positive modulus together with its factorization.
// factors holds (prime, exponent) pairs with strictly increasing primes;
// n == 1 has an empty list and counts as squarefree.
struct OddModulus {
    uint64_t n = 1;
    std::vector<std::pair<uint64_t, unsigned>> factors;
    bool squarefree = true;
};

uint64_t mul_mod(uint64_t a, uint64_t b, uint64_t m);
uint64_t pow_mod(uint64_t x, uint64_t e, uint64_t m);
// Inverse of a mod m; throws std::invalid_argument unless gcd(a, m) == 1.
uint64_t inv_mod(uint64_t a, uint64_t m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Factors an arbitrary positive integer (trial division, then Pollard rho).
std::vector<std::pair<uint64_t, unsigned>> factorize_u64(uint64_t n);

// Factors an odd positive integer; throws on even or zero input.
OddModulus factorize_odd(uint64_t n);

// Jacobi symbol (a | n) for odd positive n.  Fully multiplicative in a,
// 0 exactly when gcd(a, n) > 1, and (a | 1) == 1 for every a.
int jacobi(int64_t a, uint64_t n);

// Square root of a mod an odd prime p via Tonelli-Shanks.
// Returns the smaller of the two roots (in [0, (p-1)/2]); nullopt if a is
// a non-residue.
std::optional<uint64_t> sqrt_mod_prime(uint64_t a, uint64_t p);

// Whether x^2 = m (mod n) is solvable with gcd(m, n) == 1.  Solvability is
// certified: a root is built per prime power (Tonelli-Shanks plus Hensel
// lifting), combined by CRT, and verified before returning true.
bool is_quadratic_residue(int64_t m, const OddModulus& n);

// sum_{r=1}^{p-1} r^s mod p for prime p: p-1 when (p-1) | s, else 0.
uint64_t power_sum(uint64_t p, uint64_t s);

// ((p-1)/2)! mod p for a prime p = 1 (mod 4); the result squares to -1.
uint64_t factorial_half(uint64_t p);

// Solves x = r_i (mod m_i) for pairwise coprime moduli; returns (x, prod m_i).
// Throws std::invalid_argument on non-coprime moduli and std::overflow_error
// if the combined modulus exceeds 64 bits.
std::pair<uint64_t, uint64_t> crt_combine(
    const std::vector<std::pair<uint64_t, uint64_t>>& legs);

}  // namespace jacdet
