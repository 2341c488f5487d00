#pragma once

#include <cstdint>

#include "jacdet/exactla.hpp"
#include "jacdet/modarith.hpp"
#include "jacdet/repcong.hpp"

namespace jacdet {

enum class FormKind { punctured, full };

// Matrix of Jacobi symbols (i^2 + c*i*j + d*j^2 | n): the punctured kind
// indexes i,j over 1..n-1, the full kind over 0..n-1.
struct FormDetSpec {
    int64_t c = 0;
    int64_t d = 0;
    OddModulus n;  // n odd, n > 1
    FormKind kind = FormKind::punctured;
};

IntMatrix build_form_matrix(const FormDetSpec& spec);
BigInt form_det(const FormDetSpec& spec);

// jacobi(d, n) == -1, which forces the punctured determinant to vanish.
bool vanish_by_nonresidue(const FormDetSpec& spec);

// Checks the prime-modulus relation between the full and punctured
// determinants when (d|p) = 1:
//   p ∤ c^2-4d:  full = (p-1)/2 * punctured
//   p | c^2-4d:  full = (1-p)/(p-2) * punctured  (division must be exact)
struct RelationVerdict {
    bool applicable = false;    // (d|p) == 1
    bool divisor_case = false;  // p | c^2 - 4d
    bool exact_division = true;
    bool holds = false;
    BigInt punctured;
    BigInt full;
};
RelationVerdict full_vs_punctured_relation(int64_t c, int64_t d, uint64_t p);

// sum_{j=0}^{n-1} (j|n) (i^2 + c*i*j + d*j^2 | n), exact.
int64_t row_charsum(int64_t c, int64_t d, int64_t i, const OddModulus& n);

// Product over the prime factors p_s of squarefree n of
// row_charsum(c, d, i, p_s); equals row_charsum(c, d, i, n).
int64_t charsum_crt_product(int64_t c, int64_t d, int64_t i, const OddModulus& n);

// sum_j (j|n)(i^2+cij+dj^2 | n) = sum_j (-j|n)(i^2+2cij+(c^2-4d)j^2 | n)
// for squarefree odd n, checked by evaluating both sides.
bool theorem12_identity(int64_t c, int64_t d, int64_t i, const OddModulus& n);

// row_charsum(c,d,i,p) = -(ci|p) sum_k C(4k,2k)C(2k,k) (d/(16c^2))^k (mod p),
// requires p ∤ c.
bool lemma21_congruence(int64_t c, int64_t d, int64_t i, uint64_t p);

// The four closed-form evaluations of row_charsum(c,d,i,p):
//   c42_m2:     (c,d)=(4,2),    (-1)^floor((p-3)/8) (i|p) 2x,  p = x^2+2y^2
//   c32_m4:     (c,d)=(3,2),    -(2i|p) 2x,                    p = x^2+4y^2
//   c33_m3:     (c,d)=(3,3),    -(-i|p) 2x,                    p = x^2+3y^2
//   c21_112_m7: (c,d)=(21,112), -(i|p) 2x,                     p = x^2+7y^2
// each 0 when -m is a non-residue mod p.
enum class ClosedFormCase { c42_m2, c32_m4, c33_m3, c21_112_m7 };
int64_t lemma33_closed_form(ClosedFormCase cs, int64_t i, uint64_t p);

// sum_j (j|p)(i^2+3cij+dj^2 | p) = (i|p) sum_x (x^3-(3c^2-d)x+c(2c^2-d) | p),
// requires p ∤ d; checked by evaluating both sides.
bool lemma32_cubic_transform(int64_t c, int64_t d, int64_t i, uint64_t p);

}  // namespace jacdet
