#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace jacdet {

// Element of F_p (a1 == 0) or of F_{p^2} = F_p(w), w^2 = g: value a0 + a1*w.
struct FqElem {
    uint32_t a0 = 0;
    uint32_t a1 = 0;
    bool operator==(const FqElem&) const = default;
};

// Least quadratic non-residue mod an odd prime p.
uint32_t nonresidue(uint32_t p);

// Arithmetic context for F_p or F_{p^2}.  The quadratic extension is always
// realized as F_p(sqrt(g)) with g the least non-residue, so elements have a
// unique coordinate representation.
class FieldCtx {
public:
    static FieldCtx fp(uint32_t p);
    static FieldCtx fp2(uint32_t p);

    uint32_t p() const { return p_; }
    int degree() const { return deg_; }
    uint64_t q() const { return q_; }
    uint32_t g() const { return g_; }

    FqElem make(uint32_t a0, uint32_t a1) const;
    FqElem from_int(int64_t v) const;
    bool is_zero(FqElem x) const { return x.a0 == 0 && x.a1 == 0; }
    FqElem zero() const { return {0, 0}; }
    FqElem one() const { return {1, 0}; }

    FqElem add(FqElem x, FqElem y) const;
    FqElem sub(FqElem x, FqElem y) const;
    FqElem neg(FqElem x) const;
    FqElem mul(FqElem x, FqElem y) const;
    FqElem inv(FqElem x) const;  // throws on zero
    FqElem pow(FqElem x, uint64_t e) const;

    // Quadratic character: 0 at zero, else +-1 via x^((q-1)/2).
    int chi(FqElem x) const;

    // Canonical square root: the lexicographically smaller of the two roots
    // by (a0, a1); nullopt when x is a non-square.
    std::optional<FqElem> sqrt(FqElem x) const;

    // z^((q-1)/(p-1)); lands in the base field (checked) for degree 2.
    FqElem norm_power(FqElem z) const;

    // All q elements: degree 1 in order 0..p-1, degree 2 lexicographic by
    // (a0, a1).
    std::vector<FqElem> enumerate() const;
    uint64_t index_of(FqElem x) const;

    std::string to_string(FqElem x) const;

private:
    FieldCtx(uint32_t p, int deg);
    uint32_t p_ = 3;
    int deg_ = 1;
    uint32_t g_ = 0;
    uint64_t q_ = 3;
};

// sqrt(a) for nonzero a in F_p, taken inside F_{p^2}: lands in the base field
// when a is a residue, else is a pure w-multiple with a1 in [1, (p-1)/2].
FqElem sqrt_lift(uint32_t a, const FieldCtx& ext);

}  // namespace jacdet
