#include "jacdet/charmatrix.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace jacdet {

namespace {

std::vector<FqElem> index_set(const FieldCtx& ctx, MatrixVariant variant) {
    std::vector<FqElem> all = ctx.enumerate();
    if (variant == MatrixVariant::M)
        all.erase(all.begin());  // canonical enumeration starts at zero
    return all;
}

}  // namespace

IntMatrix build_char_matrix(const CharMatrixSpec& spec) {
    FqRing ring{&spec.ctx};
    FqPoly P = spec.P;
    poly_trim(ring, P);
    if (P.c.empty()) throw std::invalid_argument("build_char_matrix: zero polynomial");
    std::vector<FqElem> idx = index_set(spec.ctx, spec.variant);
    IntMatrix m(idx.size(), idx.size());
    for (size_t r = 0; r < idx.size(); ++r)
        for (size_t c = 0; c < idx.size(); ++c)
            m.at(r, c) = spec.ctx.chi(eval_homogeneous(ring, P, idx[r], idx[c]));
    return m;
}

IntMatrix chi_vector(const FieldCtx& ctx, MatrixVariant variant) {
    std::vector<FqElem> idx = index_set(ctx, variant);
    IntMatrix v(idx.size(), 1);
    for (size_t r = 0; r < idx.size(); ++r) v.at(r, 0) = ctx.chi(idx[r]);
    return v;
}

IntMatrix sqrt_witness_matrix(const FieldCtx& ctx, MatrixVariant variant) {
    if (ctx.chi(ctx.from_int(-1)) != 1)
        throw std::invalid_argument("sqrt_witness_matrix: requires chi(-1) = 1");
    std::vector<FqElem> idx = index_set(ctx, variant);
    IntMatrix v(idx.size(), idx.size());
    for (size_t r = 0; r < idx.size(); ++r)
        for (size_t c = 0; c < idx.size(); ++c) {
            FqElem prod = ctx.mul(idx[r], idx[c]);
            auto root = ctx.sqrt(prod);
            v.at(r, c) = root ? ctx.chi(*root) : 0;
        }
    return v;
}

int64_t hypothesis_sum(const FqPoly& P, const FieldCtx& ctx) {
    FqRing ring{&ctx};
    int64_t sum = 0;
    for (FqElem x : ctx.enumerate()) sum += ctx.chi(ctx.mul(x, poly_eval(ring, P, x)));
    return sum;
}

std::pair<int64_t, int64_t> twisted_hypothesis_sums(const FqPoly& P, const FieldCtx& ctx,
                                                    FqElem g) {
    if (ctx.chi(g) != -1)
        throw std::invalid_argument("twisted_hypothesis_sums: g must be a non-square");
    FqRing ring{&ctx};
    int64_t plain = 0, twisted = 0;
    for (FqElem x : ctx.enumerate()) {
        FqElem x2 = ctx.mul(x, x);
        plain += ctx.chi(ctx.mul(x, poly_eval(ring, P, x2)));
        twisted += ctx.chi(ctx.mul(x, poly_eval(ring, P, ctx.mul(g, x2))));
    }
    return {plain, twisted};
}

Lemma41Verdict check_lemma41(const FqPoly& P, const FieldCtx& ctx) {
    Lemma41Verdict out;
    out.hypothesis = hypothesis_sum(P, ctx);
    out.applicable = (out.hypothesis == 0);
    if (!out.applicable) return out;

    FqRing ring{&ctx};
    FqPoly trimmed = P;
    poly_trim(ring, trimmed);

    IntMatrix M = build_char_matrix({ctx, trimmed, MatrixVariant::M});
    out.det_M = det_exact(M);
    out.det_M_zero = (out.det_M == 0);
    out.chi_vector_annihilated = is_zero_matrix(matmul(M, chi_vector(ctx, MatrixVariant::M)));

    out.m0_claimed = (poly_deg(trimmed) % 2 == 0);
    IntMatrix M0 = build_char_matrix({ctx, trimmed, MatrixVariant::M0});
    out.det_M0 = det_exact(M0);
    out.det_M0_zero = (out.det_M0 == 0);
    return out;
}

Lemma42Result check_lemma42(const FqPoly& P, const FieldCtx& ctx, FqElem g,
                            MatrixVariant variant) {
    Lemma42Result out;
    if (ctx.chi(ctx.from_int(-1)) != 1) {
        out.status = Lemma42Status::chi_minus_one_negative;
        return out;
    }
    if (ctx.chi(g) != -1) {
        out.status = Lemma42Status::g_not_nonsquare;
        return out;
    }
    auto [plain, twisted] = twisted_hypothesis_sums(P, ctx, g);
    out.sum_plain = plain;
    out.sum_twisted = twisted;
    if (plain != 0 || twisted != 0) {
        out.status = Lemma42Status::hypothesis_nonzero;
        return out;
    }
    IntMatrix M = build_char_matrix({ctx, P, variant});
    IntMatrix V = sqrt_witness_matrix(ctx, variant);
    out.witness_rank = rank_kernel(V).rank;
    out.product_vanishes = is_zero_matrix(matmul(M, V));
    out.char_rank = rank_kernel(M);
    out.kernel_at_least_two = (out.char_rank.kernel_dim >= 2);
    return out;
}

int64_t theorem41_sum(unsigned m, FqElem a, FqElem g, const FieldCtx& ctx) {
    if (ctx.is_zero(a) || ctx.is_zero(g))
        throw std::invalid_argument("theorem41_sum: a and g must be nonzero");
    if (std::gcd(static_cast<uint64_t>(m), ctx.q() - 1) != 1)
        throw std::invalid_argument("theorem41_sum: requires gcd(m, q-1) = 1");
    FqRing ring{&ctx};
    FqPoly P = build_Pm(ring, m, a);
    int64_t sum = 0;
    for (FqElem x : ctx.enumerate())
        sum += ctx.chi(ctx.mul(x, poly_eval(ring, P, ctx.mul(g, ctx.mul(x, x)))));
    return sum;
}

int64_t theorem42_sum(unsigned m, FqElem a, FqElem g, const FieldCtx& ctx) {
    if (ctx.is_zero(a) || ctx.is_zero(g))
        throw std::invalid_argument("theorem42_sum: a and g must be nonzero");
    if (std::gcd(static_cast<uint64_t>(m), ctx.q() * ctx.q() - 1) != 1)
        throw std::invalid_argument("theorem42_sum: requires gcd(m, q^2-1) = 1");
    FqRing ring{&ctx};
    FqPoly Q = build_Qm(ring, m, a);
    int64_t sum = 0;
    for (FqElem x : ctx.enumerate())
        sum += ctx.chi(ctx.mul(x, poly_eval(ring, Q, ctx.mul(g, ctx.mul(x, x)))));
    return sum;
}

}  // namespace jacdet
