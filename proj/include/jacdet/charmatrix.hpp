#pragma once

#include <cstdint>
#include <utility>

#include "jacdet/exactla.hpp"
#include "jacdet/finitefield.hpp"
#include "jacdet/poly.hpp"

namespace jacdet {

// Character matrices attached to a polynomial over F_q: rows and columns run
// over the canonical field enumeration, the entry at (a, b) is chi(P*(a, b))
// with P* the homogenization of P at its true degree and chi the quadratic
// character.  Variant M indexes over the nonzero elements, M0 over all of
// them.

enum class MatrixVariant { M, M0 };

struct CharMatrixSpec {
    FieldCtx ctx;
    FqPoly P;  // nonzero
    MatrixVariant variant = MatrixVariant::M;
};

// Entries chi(P*(a, b)) in {-1, 0, 1}; throws on the zero polynomial.
IntMatrix build_char_matrix(const CharMatrixSpec& spec);

// Column vector with v_b = chi(b) over the chosen index set.
IntMatrix chi_vector(const FieldCtx& ctx, MatrixVariant variant);

// v_{a,b} = chi(sqrt(ab)) when ab is a square, 0 otherwise.  Well defined
// only when chi(-1) = 1 (the two square roots share a character value);
// throws otherwise.  Rank is exactly 2 for q > 1: columns at b and b*c^2 are
// proportional while columns at 1 and a non-square are not.
IntMatrix sqrt_witness_matrix(const FieldCtx& ctx, MatrixVariant variant);

// sum over x in F_q of chi(x * P(x)).
int64_t hypothesis_sum(const FqPoly& P, const FieldCtx& ctx);

// (sum chi(x * P(x^2)), sum chi(x * P(g x^2))) for a non-square g; rejects
// g = 0 and square g.
std::pair<int64_t, int64_t> twisted_hypothesis_sums(const FqPoly& P, const FieldCtx& ctx,
                                                    FqElem g);

// Singularity of M(P, chi) from a vanishing hypothesis sum.  When the sum is
// nonzero nothing is claimed (applicable = false, remaining fields
// defaulted).  When it vanishes: det M must be 0 and the chi-vector must be
// annihilated; det M0 is claimed to vanish only for even deg P (odd
// character power), but is computed and reported either way.
struct Lemma41Verdict {
    bool applicable = false;
    int64_t hypothesis = 0;
    BigInt det_M = 0;
    bool det_M_zero = false;
    bool chi_vector_annihilated = false;
    bool m0_claimed = false;
    BigInt det_M0 = 0;
    bool det_M0_zero = false;
};
Lemma41Verdict check_lemma41(const FqPoly& P, const FieldCtx& ctx);

// Kernel dimension >= 2 from vanishing twisted sums, witnessed by the
// sqrt-matrix: V has rank exactly 2 and M * V = 0, so the kernel of M
// contains a 2-dimensional column space.  Preconditions that fail are
// reported in `status` and nothing else is computed.
enum class Lemma42Status {
    ok,
    chi_minus_one_negative,  // q = 3 (mod 4), the witness is ill defined
    g_not_nonsquare,         // g zero or a square
    hypothesis_nonzero,      // one of the two twisted sums is nonzero
};

struct Lemma42Result {
    Lemma42Status status = Lemma42Status::ok;
    int64_t sum_plain = 0;
    int64_t sum_twisted = 0;
    size_t witness_rank = 0;        // rank of V (or V0); must equal 2
    bool product_vanishes = false;  // M * V == 0 exactly
    RankResult char_rank;           // rank/kernel of M (or M0)
    bool kernel_at_least_two = false;
};
Lemma42Result check_lemma42(const FqPoly& P, const FieldCtx& ctx, FqElem g,
                            MatrixVariant variant);

// sum over x in F_q of chi(x * P_m(g x^2, a)); requires gcd(m, q-1) = 1 and
// nonzero a, g.  The sum is identically zero in that range (tests assert it).
int64_t theorem41_sum(unsigned m, FqElem a, FqElem g, const FieldCtx& ctx);

// sum over x in F_q of chi(x * Q_m(g x^2, a)); requires gcd(m, q^2-1) = 1 and
// nonzero a, g.  x Q_m(g x^2, a) is a Dickson permutation of F_q, so the sum
// is identically zero in that range.
int64_t theorem42_sum(unsigned m, FqElem a, FqElem g, const FieldCtx& ctx);

}  // namespace jacdet
