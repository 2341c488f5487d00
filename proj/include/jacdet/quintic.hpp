#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "jacdet/finitefield.hpp"
#include "jacdet/poly.hpp"

namespace jacdet {

// Character sums of odd quintics a*x^5 + b*x^3 + c*x over F_p and the
// quartic-curve point-count criterion for their vanishing.

struct QuinticSpec {
    uint32_t p;  // prime, p = 1 (mod 4)
    uint32_t a, b, c;  // nonzero residues mod p
};

// Validates and reduces: p must be a prime = 1 (mod 4) and a, b, c nonzero
// mod p; throws std::invalid_argument otherwise.
QuinticSpec make_quintic_spec(uint32_t p, int64_t a, int64_t b, int64_t c);

// sum over x in F_p of chi_p(a x^5 + b x^3 + c x); |result| < p.
int64_t quintic_sum_Ap(const QuinticSpec& spec);

// The same sum mod p as an F_p residue, from the closed form
//   -C((p-1)/2, (p-1)/4) * b^((p-1)/4) * (a^((p-1)/4) + c^((p-1)/4))
//     * f(ac/b^2)
// with f the truncated series from build_f.
uint32_t Ap_mod_formula(const QuinticSpec& spec);

// sum over x in F_q of chi_q(alpha x^4 + beta x^2 + gamma); any arguments.
int64_t quartic_sum_Bq(FqElem alpha, FqElem beta, FqElem gamma, const FieldCtx& ctx);

// Closed form for the quartic sum mod p as an element of F_q:
//   -chi_q(alpha) - chi_q(beta) * g(alpha gamma / beta^2)^(1+p+...+p^(n-1)),
// g the truncated series from build_g with coefficients lifted into F_q.
// Requires nonzero alpha, beta, gamma.
FqElem Bq_mod_formula(FqElem alpha, FqElem beta, FqElem gamma, const FieldCtx& ctx);

// Power-sum identity over F_q, q = p^n with n in {1, 2}: for deg H <= 2(p-1),
//   sum over x of H(x)^(1+p+...+p^(n-1)) = -c_(p-1)^e - c_(2(p-1))^e
// with e the same exponent.  The left side is brute-forced; `pass` compares.
struct ExtensionSumCheck {
    FqElem lhs;
    FqElem rhs;
    bool pass = false;
};
ExtensionSumCheck extension_power_sum(const FqPoly& H, const FieldCtx& ctx);

// Same identity over the cubic extension F_p[t]/(m) with m the smallest
// irreducible monic cubic; H's coefficients are digit triples c0 + c1 t +
// c2 t^2.  Requires H.size() <= 2p - 1 (degree <= 2(p-1)).
bool extension_power_sum_cubic(const std::vector<std::array<uint32_t, 3>>& H, uint32_t p);

// gamma = (b + 2 sqrt(ac)) / (16 sqrt(ac)) in F_q, where q is p or p^2
// according as ac is or is not a square mod p.  The canonical root is
// recorded; either choice satisfies (16 gamma - 2)^2 = b^2/(ac).
struct GammaResult {
    FieldCtx ctx;
    FqElem gamma;
    FqElem sqrt_ac;
};
GammaResult gamma_of(const QuinticSpec& spec);

// The point-count criterion: N = #{(x, y) in F_q^2 : y^2 = x^4 + x^2 +
// gamma} = q + B_q(1, 1, gamma).  If N = -1 (mod p) then the quintic sum
// vanishes; both quantities are recorded, plus the independent g(gamma) = 0
// reformulation of the condition.
struct Theorem51Verdict {
    uint64_t q = 0;
    FqElem gamma;
    int64_t Bq = 0;
    int64_t N_mod_p = 0;  // canonical residue of q + Bq
    bool condition_met = false;   // N = -1 (mod p)
    bool g_vanishes = false;      // g(gamma) == 0 in F_q
    int64_t Ap = 0;
    bool implication_holds = false;  // condition_met implies Ap == 0
};
Theorem51Verdict theorem51_condition(const QuinticSpec& spec);

// Table y -> sum over x in F_p of chi_p(x^5 + c1 x^3 y + c2 x y^2) for
// y = 0..p-1; p an odd prime.
std::vector<int64_t> bivariate_quintic_sweep(int64_t c1, int64_t c2, uint32_t p);

}  // namespace jacdet
