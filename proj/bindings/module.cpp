#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "jacdet/charmatrix.hpp"
#include "jacdet/exactla.hpp"
#include "jacdet/finitefield.hpp"
#include "jacdet/modarith.hpp"
#include "jacdet/poly.hpp"
#include "jacdet/quadforms.hpp"
#include "jacdet/quintic.hpp"
#include "jacdet/repcong.hpp"
#include "jacdet/verifycli.hpp"

namespace py = pybind11;
using namespace jacdet;

namespace {

py::object big_to_py(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

FormKind kind_of(const std::string& kind) {
    if (kind == "punctured") return FormKind::punctured;
    if (kind == "full") return FormKind::full;
    throw std::invalid_argument("kind must be 'punctured' or 'full'");
}

FieldCtx ctx_of(uint64_t q) {
    if (q % 2 == 1 && is_prime_u64(q)) return FieldCtx::fp(static_cast<uint32_t>(q));
    for (uint64_t r = 3; r * r <= q; r += 2)
        if (r * r == q && is_prime_u64(r)) return FieldCtx::fp2(static_cast<uint32_t>(r));
    throw std::invalid_argument("q must be an odd prime or the square of one");
}

MatrixVariant variant_of(const std::string& v) {
    if (v == "M") return MatrixVariant::M;
    if (v == "M0") return MatrixVariant::M0;
    throw std::invalid_argument("variant must be 'M' or 'M0'");
}

py::object json_to_py(const nlohmann::ordered_json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Jacobi-symbol determinants, character sums, and verification suites";

    // modular arithmetic
    m.def("jacobi", &jacobi, py::arg("a"), py::arg("n"),
          "Jacobi symbol (a|n) for odd n >= 1");
    m.def("is_prime", &is_prime_u64, py::arg("n"));
    m.def(
        "sqrt_mod", [](uint64_t a, uint64_t p) { return sqrt_mod_prime(a, p); },
        py::arg("a"), py::arg("p"), "Smaller square root of a mod prime p, or None");

    // quadratic-form determinants and row sums
    m.def(
        "form_det",
        [](int64_t c, int64_t d, uint64_t n, const std::string& kind) {
            return big_to_py(form_det({c, d, factorize_odd(n), kind_of(kind)}));
        },
        py::arg("c"), py::arg("d"), py::arg("n"), py::arg("kind") = "punctured",
        "Determinant of the symbol matrix (i^2 + c*i*j + d*j^2 | n)");
    m.def(
        "form_matrix",
        [](int64_t c, int64_t d, uint64_t n, const std::string& kind) {
            IntMatrix mat = build_form_matrix({c, d, factorize_odd(n), kind_of(kind)});
            std::vector<std::vector<long>> rows(mat.rows());
            for (size_t r = 0; r < mat.rows(); ++r)
                for (size_t cc = 0; cc < mat.cols(); ++cc)
                    rows[r].push_back(mat.at(r, cc).convert_to<long>());
            return rows;
        },
        py::arg("c"), py::arg("d"), py::arg("n"), py::arg("kind") = "punctured");
    m.def(
        "row_charsum",
        [](int64_t c, int64_t d, int64_t i, uint64_t n) {
            return row_charsum(c, d, i, factorize_odd(n));
        },
        py::arg("c"), py::arg("d"), py::arg("i"), py::arg("n"));
    m.def(
        "charsum_product",
        [](int64_t c, int64_t d, int64_t i, uint64_t n) {
            return charsum_crt_product(c, d, i, factorize_odd(n));
        },
        py::arg("c"), py::arg("d"), py::arg("i"), py::arg("n"),
        "Per-prime product form of the row sum (squarefree n)");
    m.def(
        "row_identity_holds",
        [](int64_t c, int64_t d, int64_t i, uint64_t n) {
            return theorem12_identity(c, d, i, factorize_odd(n));
        },
        py::arg("c"), py::arg("d"), py::arg("i"), py::arg("n"));

    // representations and congruences
    m.def(
        "cornacchia",
        [](uint64_t p, int mm) -> std::optional<std::pair<int64_t, int64_t>> {
            std::optional<Representation> rep = cornacchia(p, mm);
            if (!rep) return std::nullopt;
            return std::make_pair(rep->x, rep->y);
        },
        py::arg("p"), py::arg("m"),
        "Normalized (x, y) with p = x^2 + m*y^2, or None");
    m.def("series_vanishes_mod_p2", &lemma22_polycheck, py::arg("p"));
    m.def(
        "supercongruence",
        [](uint64_t p) {
            Lemma31Result r = lemma31_check(p);
            py::dict out;
            out["holds"] = r.pass;
            out["residue_branch"] = r.residue_branch;
            out["sum"] = big_to_py(r.sum);
            out["expected"] = big_to_py(r.expected);
            if (r.rep) out["x"] = r.rep->x;
            return out;
        },
        py::arg("p"));

    // character matrices
    m.def(
        "char_matrix",
        [](uint64_t q, const std::string& poly, const std::string& variant) {
            FieldCtx ctx = ctx_of(q);
            CharMatrixSpec spec{ctx, parse_poly(poly, ctx), variant_of(variant)};
            IntMatrix mat = build_char_matrix(spec);
            RankResult rank = rank_kernel(mat);
            py::dict out;
            out["det"] = big_to_py(det_exact(mat));
            out["rank"] = rank.rank;
            out["kernel_dim"] = rank.kernel_dim;
            out["size"] = mat.rows();
            return out;
        },
        py::arg("q"), py::arg("poly"), py::arg("variant") = "M");
    m.def(
        "singular_from_hypothesis",
        [](uint64_t q, const std::string& poly) {
            FieldCtx ctx = ctx_of(q);
            Lemma41Verdict v = check_lemma41(parse_poly(poly, ctx), ctx);
            py::dict out;
            out["applicable"] = v.applicable;
            out["hypothesis"] = v.hypothesis;
            out["det_M"] = big_to_py(v.det_M);
            out["chi_vector_annihilated"] = v.chi_vector_annihilated;
            out["m0_claimed"] = v.m0_claimed;
            out["det_M0"] = big_to_py(v.det_M0);
            return out;
        },
        py::arg("q"), py::arg("poly"));
    m.def(
        "kernel_two_witness",
        [](uint64_t q, const std::string& poly, const std::string& variant) {
            FieldCtx ctx = ctx_of(q);
            FqElem g{};
            for (const FqElem& e : ctx.enumerate())
                if (ctx.chi(e) == -1) {
                    g = e;
                    break;
                }
            Lemma42Result r = check_lemma42(parse_poly(poly, ctx), ctx, g, variant_of(variant));
            py::dict out;
            out["ok"] = r.status == Lemma42Status::ok;
            out["sum_plain"] = r.sum_plain;
            out["sum_twisted"] = r.sum_twisted;
            out["witness_rank"] = r.witness_rank;
            out["product_vanishes"] = r.product_vanishes;
            out["kernel_dim"] = r.char_rank.kernel_dim;
            out["kernel_at_least_two"] = r.kernel_at_least_two;
            return out;
        },
        py::arg("q"), py::arg("poly"), py::arg("variant") = "M");

    // quintic character sums
    m.def(
        "quintic_sum",
        [](uint32_t p, int64_t a, int64_t b, int64_t c) {
            return quintic_sum_Ap(make_quintic_spec(p, a, b, c));
        },
        py::arg("p"), py::arg("a"), py::arg("b"), py::arg("c"));
    m.def(
        "quintic_sum_mod_p",
        [](uint32_t p, int64_t a, int64_t b, int64_t c) {
            return Ap_mod_formula(make_quintic_spec(p, a, b, c));
        },
        py::arg("p"), py::arg("a"), py::arg("b"), py::arg("c"),
        "Closed form for the quintic sum as a residue mod p");
    m.def(
        "point_count_criterion",
        [](uint32_t p, int64_t a, int64_t b, int64_t c) {
            Theorem51Verdict v = theorem51_condition(make_quintic_spec(p, a, b, c));
            py::dict out;
            out["q"] = v.q;
            out["N_mod_p"] = v.N_mod_p;
            out["condition_met"] = v.condition_met;
            out["g_vanishes"] = v.g_vanishes;
            out["sum"] = v.Ap;
            out["implication_holds"] = v.implication_holds;
            return out;
        },
        py::arg("p"), py::arg("a"), py::arg("b"), py::arg("c"));
    m.def(
        "bivariate_sweep",
        [](int64_t c1, int64_t c2, uint32_t p) {
            return bivariate_quintic_sweep(c1, c2, p);
        },
        py::arg("c1"), py::arg("c2"), py::arg("p"));

    // verification suites
    m.def("suite_catalog", [] { return suite_catalog(); });
    m.def(
        "run_suite",
        [](const std::string& suite_id, std::optional<uint32_t> max_n,
           std::optional<std::vector<uint64_t>> primes, std::optional<uint64_t> seed,
           std::optional<std::string> cache_path) {
            SuiteSpec spec = make_suite_spec(suite_id);
            if (max_n) spec.range.max_n = *max_n;
            if (primes) spec.range.primes = *primes;
            if (seed) spec.range.seed = *seed;
            std::optional<VerifyCache> cache;
            if (cache_path) cache.emplace(*cache_path);
            std::vector<VerifyRecord> records =
                run_suite(spec, cache ? &*cache : nullptr);
            py::list out;
            for (const VerifyRecord& rec : records) out.append(json_to_py(rec.to_json(true)));
            return out;
        },
        py::arg("suite_id"), py::arg("max_n") = py::none(),
        py::arg("primes") = py::none(), py::arg("seed") = py::none(),
        py::arg("cache") = py::none(),
        "Run a named suite; returns one dict per parameter point");
}
