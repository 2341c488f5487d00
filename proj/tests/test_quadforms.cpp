#include <doctest.h>

#include <random>
#include <vector>

#include "jacdet/quadforms.hpp"

using namespace jacdet;

namespace {

// Oracle: cofactor-expansion determinant.
BigInt naive_det(const IntMatrix& m) {
    size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    BigInt acc = 0;
    IntMatrix minor(n - 1, n - 1);
    for (size_t k = 0; k < n; ++k) {
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == k) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        BigInt term = m.at(0, k) * naive_det(minor);
        acc += (k % 2 == 0) ? term : -term;
    }
    return acc;
}

FormDetSpec make_spec(int64_t c, int64_t d, uint64_t n, FormKind kind) {
    return {c, d, factorize_odd(n), kind};
}

}  // namespace

TEST_CASE("form matrix entries: frozen 4x4 example") {
    IntMatrix m = build_form_matrix(make_spec(3, 2, 5, FormKind::punctured));
    REQUIRE(m.rows() == 4);
    REQUIRE(m.cols() == 4);
    int64_t expect[4][4] = {{1, 0, -1, 0}, {-1, 1, 0, 0}, {0, 0, 1, -1}, {0, -1, 0, 1}};
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) CHECK(m.at(i, j) == expect[i][j]);
    CHECK(naive_det(m) == 0);
    CHECK(form_det(make_spec(3, 2, 5, FormKind::punctured)) == 0);
}

TEST_CASE("form matrix: all-zero 2x2 case and dimensions") {
    IntMatrix z = build_form_matrix(make_spec(0, 2, 3, FormKind::punctured));
    REQUIRE(z.rows() == 2);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) CHECK(z.at(i, j) == 0);

    IntMatrix full = build_form_matrix(make_spec(0, 2, 3, FormKind::full));
    CHECK(full.rows() == 3);

    IntMatrix big = build_form_matrix(make_spec(10, 9, 17, FormKind::punctured));
    REQUIRE(big.rows() == 16);
    for (size_t i = 0; i < 16; ++i)
        for (size_t j = 0; j < 16; ++j) {
            CHECK(big.at(i, j) >= -1);
            CHECK(big.at(i, j) <= 1);
        }
}

TEST_CASE("form determinants against the cofactor oracle for n <= 9") {
    for (uint64_t n : {3u, 5u, 7u, 9u}) {
        for (int64_t c : {0, 1, 3, 6}) {
            for (int64_t d : {-3, 1, 2, 5}) {
                FormDetSpec sp = make_spec(c, d, n, FormKind::punctured);
                CHECK(form_det(sp) == naive_det(build_form_matrix(sp)));
                FormDetSpec sf = make_spec(c, d, n, FormKind::full);
                CHECK(form_det(sf) == naive_det(build_form_matrix(sf)));
            }
        }
    }
}

TEST_CASE("frozen determinant zeros") {
    CHECK(form_det(make_spec(6, 1, 7, FormKind::punctured)) == 0);
    CHECK(form_det(make_spec(6, 1, 7, FormKind::full)) == 0);
    CHECK(form_det(make_spec(10, 9, 17, FormKind::punctured)) == 0);
    CHECK(form_det(make_spec(5, 5, 13, FormKind::full)) == 0);
}

TEST_CASE("non-residue d forces the punctured determinant to vanish") {
    CHECK(vanish_by_nonresidue(make_spec(0, 2, 3, FormKind::punctured)));
    CHECK_FALSE(vanish_by_nonresidue(make_spec(5, 1, 9, FormKind::punctured)));
    CHECK_FALSE(vanish_by_nonresidue(make_spec(0, 9, 17, FormKind::punctured)));
    CHECK_THROWS(vanish_by_nonresidue(make_spec(0, 2, 3, FormKind::full)));

    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int64_t> dc(-9, 9);
    for (uint64_t n = 3; n <= 51; n += 2) {
        for (int trial = 0; trial < 6; ++trial) {
            int64_t c = dc(rng), d = dc(rng);
            FormDetSpec sp = make_spec(c, d, n, FormKind::punctured);
            if (vanish_by_nonresidue(sp)) CHECK(form_det(sp) == 0);
        }
    }
}

TEST_CASE("full vs punctured determinant relation at prime modulus") {
    RelationVerdict v = full_vs_punctured_relation(10, 9, 17);
    CHECK(v.applicable);
    CHECK(v.holds);
    CHECK(v.punctured == 0);
    CHECK(v.full == 0);

    v = full_vs_punctured_relation(0, 1, 5);
    CHECK(v.applicable);
    CHECK_FALSE(v.divisor_case);
    CHECK(v.holds);
    CHECK(v.full == 2 * v.punctured);

    v = full_vs_punctured_relation(2, 1, 5);  // 5 | 4 - 4 = 0
    CHECK(v.applicable);
    CHECK(v.divisor_case);
    CHECK(v.exact_division);
    CHECK(v.holds);

    v = full_vs_punctured_relation(0, 2, 5);  // (2|5) = -1
    CHECK_FALSE(v.applicable);

    CHECK_THROWS(full_vs_punctured_relation(0, 1, 9));
}

TEST_CASE("full vs punctured relation holds for all residues d, p <= 23") {
    for (uint64_t p : {3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
        for (uint64_t c = 0; c < p; ++c) {
            for (uint64_t d = 1; d < p; ++d) {
                if (jacobi(static_cast<int64_t>(d), p) != 1) continue;
                RelationVerdict v = full_vs_punctured_relation(
                    static_cast<int64_t>(c), static_cast<int64_t>(d), p);
                CHECK(v.applicable);
                CHECK(v.exact_division);
                CHECK(v.holds);
            }
        }
    }
}

TEST_CASE("row character sums: frozen values") {
    CHECK(row_charsum(4, 2, 1, factorize_odd(17)) == 6);
    // -1 is not a residue mod 21, so every row sum for (3,2) vanishes
    for (int64_t i = 0; i < 21; ++i) CHECK(row_charsum(3, 2, i, factorize_odd(21)) == 0);
    // i = 0 at prime modulus: (d|p) sum_j (j|p) = 0
    CHECK(row_charsum(5, 2, 0, factorize_odd(7)) == 0);
    // n = 1 sums to 1 under the (a|1) = 1 convention
    CHECK(row_charsum(3, 2, 0, factorize_odd(1)) == 1);
}

TEST_CASE("charsum transformation identity, exhaustive on small squarefree n") {
    std::vector<std::pair<int64_t, int64_t>> pairs = {
        {0, 1}, {1, 3}, {2, -1}, {3, 2}, {4, 2}, {3, 3}, {21, 112}, {-2, 5}};
    for (uint64_t n = 1; n <= 45; n += 2) {
        OddModulus om = factorize_odd(n);
        if (!om.squarefree) continue;
        for (auto [c, d] : pairs)
            for (uint64_t i = 0; i < n; ++i)
                CHECK(theorem12_identity(c, d, static_cast<int64_t>(i), om));
    }
    CHECK_THROWS(theorem12_identity(1, 3, 2, factorize_odd(9)));
}

TEST_CASE("charsum factors through the prime decomposition") {
    for (uint64_t n : {15u, 21u, 33u, 35u, 105u}) {
        OddModulus om = factorize_odd(n);
        for (uint64_t i = 0; i < n; ++i) {
            CHECK(charsum_crt_product(3, 2, static_cast<int64_t>(i), om) ==
                  row_charsum(3, 2, static_cast<int64_t>(i), om));
            CHECK(charsum_crt_product(1, 3, static_cast<int64_t>(i), om) ==
                  row_charsum(1, 3, static_cast<int64_t>(i), om));
        }
    }
    CHECK(charsum_crt_product(3, 2, 1, factorize_odd(7)) ==
          row_charsum(3, 2, 1, factorize_odd(7)));
    CHECK_THROWS(charsum_crt_product(3, 2, 1, factorize_odd(9)));
}

TEST_CASE("row charsum congruence against the central-binomial sum") {
    for (uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
        for (uint64_t c = 1; c < p; ++c)
            for (uint64_t d = 0; d < p; ++d)
                for (uint64_t i = 0; i < p; ++i)
                    CHECK(lemma21_congruence(static_cast<int64_t>(c), static_cast<int64_t>(d),
                                             static_cast<int64_t>(i), p));
    }
    CHECK(lemma21_congruence(1, 1, 1, 5));
    CHECK(lemma21_congruence(4, 2, 3, 13));
    CHECK_THROWS(lemma21_congruence(5, 1, 1, 5));   // p | c
    CHECK_THROWS(lemma21_congruence(1, 1, 1, 15));  // composite
}

TEST_CASE("closed forms equal the direct row sums, all cases, p <= 53") {
    for (uint64_t p = 3; p <= 53; p += 2) {
        if (!is_prime_u64(p)) continue;
        OddModulus om = factorize_odd(p);
        for (uint64_t i = 0; i < p; ++i) {
            int64_t ii = static_cast<int64_t>(i);
            CHECK(lemma33_closed_form(ClosedFormCase::c42_m2, ii, p) ==
                  row_charsum(4, 2, ii, om));
            CHECK(lemma33_closed_form(ClosedFormCase::c32_m4, ii, p) ==
                  row_charsum(3, 2, ii, om));
            CHECK(lemma33_closed_form(ClosedFormCase::c33_m3, ii, p) ==
                  row_charsum(3, 3, ii, om));
            CHECK(lemma33_closed_form(ClosedFormCase::c21_112_m7, ii, p) ==
                  row_charsum(21, 112, ii, om));
        }
    }
}

TEST_CASE("closed forms: frozen values") {
    CHECK(lemma33_closed_form(ClosedFormCase::c32_m4, 1, 13) == -6);
    CHECK(lemma33_closed_form(ClosedFormCase::c33_m3, 1, 7) == -4);
    CHECK(lemma33_closed_form(ClosedFormCase::c21_112_m7, 1, 11) == -4);
    CHECK(lemma33_closed_form(ClosedFormCase::c42_m2, 1, 7) == 0);   // 7 = 7 (mod 8)
    CHECK(lemma33_closed_form(ClosedFormCase::c42_m2, 0, 17) == 0);  // (0|p) = 0
    CHECK(lemma33_closed_form(ClosedFormCase::c21_112_m7, 1, 7) == 0);
}

TEST_CASE("cubic transformation of the row charsum") {
    for (uint64_t p : {3u, 5u, 7u, 11u, 13u}) {
        for (uint64_t c = 0; c < p; ++c)
            for (uint64_t d = 1; d < p; ++d)
                for (uint64_t i = 0; i < p; ++i)
                    CHECK(lemma32_cubic_transform(static_cast<int64_t>(c),
                                                  static_cast<int64_t>(d),
                                                  static_cast<int64_t>(i), p));
    }
    CHECK(lemma32_cubic_transform(1, 2, 1, 7));
    CHECK(lemma32_cubic_transform(1, 3, 5, 11));
    CHECK_THROWS(lemma32_cubic_transform(1, 7, 1, 7));  // p | d
}
