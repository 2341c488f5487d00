#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jacdet/exactla.hpp"

namespace jacdet {

// Solution of p = x^2 + m*y^2 with the sign of x pinned down:
//   m = 2 or 4: x = 1 (mod 4);  m = 3: x = 1 (mod 3);  m = 7: jacobi(x,7) = 1.
// y carries no constraint and is reported nonnegative.
struct Representation {
    uint64_t p = 0;
    int m = 0;
    int64_t x = 0;
    int64_t y = 0;
    bool normalized = false;
};

// Residue modulo p^2.
struct ModP2 {
    uint64_t p = 0;
    BigInt value;  // in [0, p^2)
    bool operator==(const ModP2&) const = default;
};

ModP2 make_modp2(uint64_t p, const BigInt& v);
ModP2 modp2_inv(const ModP2& v);  // throws when gcd(v, p) > 1

// Euclidean descent from a square root of -m mod p.  Returns nothing when
// -m is a non-residue mod p; throws when p is not an odd prime or p | m.
// m is restricted to {2, 3, 4, 7} (one class per genus, so the descent
// always lands on a solution when one exists).
std::optional<Representation> cornacchia(uint64_t p, int m);

// sum_{k=0}^{p-1} C(4k,2k) C(2k,k) t^k  (mod p^2), binomials exact.
ModP2 central_binom_sum(const ModP2& t);

// C(4k,2k) C(2k,k) mod p for k = 0..p-1; cached per p (thread-safe).
const std::vector<uint64_t>& central_binom_table_modp(uint64_t p);

// Coefficientwise check that
//   sum_{k=0}^{p-1} C(4k,2k)C(2k,k)/64^k (x^k - (-2/p)(1-x)^k)
// is the zero polynomial mod p^2 (mod p for p = 3).
bool lemma22_polycheck(uint64_t p);

// Both branches of the supercongruence for S = sum C(4k,2k)C(2k,k)/128^k:
//   p = 1,3 (mod 8):  S = (-1)^floor((p+5)/8) (2x - p*(2x)^{-1})  (mod p^2)
//                     with p = x^2 + 2y^2, x = 1 (mod 4);
//   p = 5,7 (mod 8):  S = 0  (mod p^2).
struct Lemma31Result {
    bool pass = false;
    bool residue_branch = false;  // p = 1,3 (mod 8)
    BigInt sum;                   // computed S mod p^2
    BigInt expected;              // closed form (0 on the non-residue branch)
    std::optional<Representation> rep;
};
Lemma31Result lemma31_check(uint64_t p);

}  // namespace jacdet
