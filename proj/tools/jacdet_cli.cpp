#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jacdet/charmatrix.hpp"
#include "jacdet/exactla.hpp"
#include "jacdet/finitefield.hpp"
#include "jacdet/modarith.hpp"
#include "jacdet/poly.hpp"
#include "jacdet/quadforms.hpp"
#include "jacdet/quintic.hpp"
#include "jacdet/repcong.hpp"
#include "jacdet/verifycli.hpp"

using jacdet::BigInt;
using nlohmann::ordered_json;

namespace {

// Exit codes: 0 success, 1 failed check, 2 usage error.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

class Timer {
  public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(ordered_json params, ordered_json value, const Timer& timer, bool timings) {
    ordered_json rec;
    rec["params"] = std::move(params);
    rec["value"] = std::move(value);
    if (timings) rec["elapsed_ms"] = timer.ms();
    std::cout << rec.dump() << "\n";
}

jacdet::FieldCtx context_for_q(uint64_t q) {
    if (q % 2 == 1 && jacdet::is_prime_u64(q))
        return jacdet::FieldCtx::fp(static_cast<uint32_t>(q));
    for (uint64_t r = 3; r * r <= q; r += 2)
        if (r * r == q && jacdet::is_prime_u64(r))
            return jacdet::FieldCtx::fp2(static_cast<uint32_t>(r));
    throw CLI::ValidationError("--q", "q must be an odd prime or the square of one");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jacobi-symbol determinants, character sums, and their verification "
                 "suites"};
    app.require_subcommand(1);
    app.fallthrough();
    bool timings = true;
    app.add_flag("!--no-timings", timings,
                 "Omit elapsed_ms from all output (byte-reproducible mode)");

    // --- det ----------------------------------------------------------------
    auto* det = app.add_subcommand("det", "Determinant of a quadratic-form symbol matrix");
    int64_t det_c = 0, det_d = 0;
    uint64_t det_n = 0;
    std::string det_kind = "punctured", det_dump;
    det->add_option("--c", det_c, "Cross coefficient c")->required();
    det->add_option("--d", det_d, "Diagonal coefficient d")->required();
    det->add_option("--n", det_n, "Odd modulus n > 1")->required();
    det->add_option("--kind", det_kind, "Index range: punctured (1..n-1) or full (0..n-1)")
        ->check(CLI::IsMember({"punctured", "full"}));
    det->add_option("--dump", det_dump, "Write the matrix as a fixture file");

    // --- detfile ------------------------------------------------------------
    auto* detfile = app.add_subcommand("detfile", "Determinant of a matrix fixture file");
    std::string detfile_path;
    detfile->add_option("path", detfile_path, "Fixture: 'rows cols' then row-major entries")
        ->required();

    // --- charsum ------------------------------------------------------------
    auto* charsum = app.add_subcommand("charsum", "Row sum of Jacobi symbols");
    int64_t cs_c = 0, cs_d = 0, cs_i = 0;
    uint64_t cs_n = 0;
    charsum->add_option("--c", cs_c)->required();
    charsum->add_option("--d", cs_d)->required();
    charsum->add_option("--i", cs_i, "Row index")->required();
    charsum->add_option("--n", cs_n, "Odd modulus")->required();

    // --- charmatrix ---------------------------------------------------------
    auto* charmatrix =
        app.add_subcommand("charmatrix", "Character matrix of a homogenized polynomial");
    uint64_t cm_q = 0;
    std::string cm_poly, cm_variant = "M";
    charmatrix->add_option("--q", cm_q, "Field size (odd prime or its square)")->required();
    charmatrix->add_option("--poly", cm_poly, "Polynomial, e.g. \"5 + 5*z + z^2\"")
        ->required();
    charmatrix->add_option("--variant", cm_variant, "M (nonzero rows) or M0 (all rows)")
        ->check(CLI::IsMember({"M", "M0"}));

    // --- repr ---------------------------------------------------------------
    auto* repr = app.add_subcommand("repr", "Representation p = x^2 + m*y^2");
    uint64_t rp_p = 0;
    int rp_m = 0;
    repr->add_option("--p", rp_p, "Odd prime")->required();
    repr->add_option("--m", rp_m, "Form parameter")->check(CLI::IsMember({2, 3, 4, 7}))
        ->required();

    // --- congruence ---------------------------------------------------------
    auto* congruence =
        app.add_subcommand("congruence", "Central-binomial supercongruence checks");
    std::string cg_lemma;
    uint64_t cg_p = 0;
    congruence->add_option("--lemma", cg_lemma, "Which congruence: 2.2 or 3.1")
        ->check(CLI::IsMember({"2.2", "3.1"}))
        ->required();
    congruence->add_option("--p", cg_p, "Odd prime")->required();

    // --- quintic ------------------------------------------------------------
    auto* quintic = app.add_subcommand("quintic", "Character sum of a*x^5 + b*x^3 + c*x");
    uint64_t qt_p = 0;
    int64_t qt_a = 0, qt_b = 0, qt_c = 0;
    bool qt_thm51 = false;
    quintic->add_option("--p", qt_p, "Prime p = 1 (mod 4)")->required();
    quintic->add_option("--a", qt_a)->required();
    quintic->add_option("--b", qt_b)->required();
    quintic->add_option("--c", qt_c)->required();
    quintic->add_flag("--theorem51", qt_thm51,
                      "Also evaluate the quartic point-count criterion");

    // --- sweep --------------------------------------------------------------
    auto* sweep =
        app.add_subcommand("sweep", "Table of sums of x^5 + c1*x^3*y + c2*x*y^2 over y");
    int64_t sw_c1 = 0, sw_c2 = 0;
    uint64_t sw_p = 0;
    sweep->add_option("--c1", sw_c1)->required();
    sweep->add_option("--c2", sw_c2)->required();
    sweep->add_option("--p", sw_p, "Odd prime")->required();

    // --- verify -------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "Run a named verification suite");
    std::string vf_suite, vf_cache, vf_format = "json", vf_out;
    uint32_t vf_max_n = 0;
    std::vector<uint64_t> vf_primes;
    uint64_t vf_seed = 0;
    verify->add_option("--suite", vf_suite, "Suite id (see the suites subcommand)")
        ->required();
    CLI::Option* vf_opt_max_n =
        verify->add_option("--max-n", vf_max_n, "Override the modulus/prime bound");
    CLI::Option* vf_opt_primes =
        verify
            ->add_option("--primes", vf_primes,
                         "Override the prime (or field size) list, comma separated")
            ->delimiter(',');
    CLI::Option* vf_opt_seed =
        verify->add_option("--seed", vf_seed, "Override the sampling seed");
    verify->add_option("--cache", vf_cache, "Append-only JSONL result cache");
    verify->add_option("--format", vf_format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", vf_out, "Write the report to a file instead of stdout");

    auto* suites = app.add_subcommand("suites", "List the registered suite ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (det->parsed()) {
            Timer timer;
            jacdet::FormDetSpec spec{det_c, det_d, jacdet::factorize_odd(det_n),
                                     det_kind == "full" ? jacdet::FormKind::full
                                                        : jacdet::FormKind::punctured};
            if (!det_dump.empty()) {
                std::ofstream out(det_dump);
                out << jacdet::dump_fixture(jacdet::build_form_matrix(spec));
            }
            BigInt value = jacdet::form_det(spec);
            emit({{"c", det_c}, {"d", det_d}, {"n", det_n}, {"kind", det_kind}},
                 value.str(), timer, timings);
            return kOk;
        }

        if (detfile->parsed()) {
            Timer timer;
            std::ifstream in(detfile_path);
            if (!in) throw std::invalid_argument("cannot open " + detfile_path);
            jacdet::IntMatrix m = jacdet::load_fixture(in);
            emit({{"file", detfile_path}, {"rows", m.rows()}, {"cols", m.cols()}},
                 jacdet::det_exact(m).str(), timer, timings);
            return kOk;
        }

        if (charsum->parsed()) {
            Timer timer;
            int64_t value = jacdet::row_charsum(cs_c, cs_d, cs_i, jacdet::factorize_odd(cs_n));
            emit({{"c", cs_c}, {"d", cs_d}, {"i", cs_i}, {"n", cs_n}}, value, timer,
                 timings);
            return kOk;
        }

        if (charmatrix->parsed()) {
            Timer timer;
            jacdet::FieldCtx ctx = context_for_q(cm_q);
            jacdet::FqPoly poly = jacdet::parse_poly(cm_poly, ctx);
            jacdet::CharMatrixSpec spec{ctx, poly,
                                        cm_variant == "M0" ? jacdet::MatrixVariant::M0
                                                           : jacdet::MatrixVariant::M};
            jacdet::IntMatrix m = jacdet::build_char_matrix(spec);
            jacdet::RankResult rank = jacdet::rank_kernel(m);
            ordered_json value = {{"det", jacdet::det_exact(m).str()},
                                  {"rank", rank.rank},
                                  {"kernel_dim", rank.kernel_dim}};
            emit({{"q", cm_q}, {"poly", jacdet::render_poly(poly, ctx)},
                  {"variant", cm_variant}},
                 value, timer, timings);
            return kOk;
        }

        if (repr->parsed()) {
            Timer timer;
            std::optional<jacdet::Representation> rep = jacdet::cornacchia(rp_p, rp_m);
            ordered_json value;
            if (rep)
                value = {{"x", rep->x}, {"y", rep->y}, {"normalized", rep->normalized}};
            else
                value = {{"representable", false}};
            emit({{"p", rp_p}, {"m", rp_m}}, value, timer, timings);
            return rep ? kOk : kCheckFailed;
        }

        if (congruence->parsed()) {
            Timer timer;
            bool ok = false;
            ordered_json value;
            if (cg_lemma == "2.2") {
                ok = jacdet::lemma22_polycheck(cg_p);
                value = {{"holds", ok}};
            } else {
                jacdet::Lemma31Result r = jacdet::lemma31_check(cg_p);
                ok = r.pass;
                value = {{"holds", ok},
                         {"branch", r.residue_branch ? "p=1,3 (mod 8)" : "p=5,7 (mod 8)"},
                         {"sum", r.sum.str()},
                         {"expected", r.expected.str()}};
            }
            emit({{"lemma", cg_lemma}, {"p", cg_p}}, value, timer, timings);
            return ok ? kOk : kCheckFailed;
        }

        if (quintic->parsed()) {
            Timer timer;
            jacdet::QuinticSpec spec =
                jacdet::make_quintic_spec(static_cast<uint32_t>(qt_p), qt_a, qt_b, qt_c);
            ordered_json value = {{"sum", jacdet::quintic_sum_Ap(spec)},
                                  {"sum_mod_p", jacdet::Ap_mod_formula(spec)}};
            if (qt_thm51) {
                jacdet::Theorem51Verdict v = jacdet::theorem51_condition(spec);
                value["theorem51"] = {{"q", v.q},
                                      {"N_mod_p", v.N_mod_p},
                                      {"condition_met", v.condition_met},
                                      {"g_vanishes", v.g_vanishes},
                                      {"implication_holds", v.implication_holds}};
            }
            emit({{"p", qt_p}, {"a", qt_a}, {"b", qt_b}, {"c", qt_c}}, value, timer,
                 timings);
            return kOk;
        }

        if (sweep->parsed()) {
            Timer timer;
            std::vector<int64_t> table =
                jacdet::bivariate_quintic_sweep(sw_c1, sw_c2, static_cast<uint32_t>(sw_p));
            emit({{"c1", sw_c1}, {"c2", sw_c2}, {"p", sw_p}}, table, timer, timings);
            return kOk;
        }

        if (suites->parsed()) {
            for (const std::string& id : jacdet::suite_catalog()) std::cout << id << "\n";
            return kOk;
        }

        if (verify->parsed()) {
            jacdet::SuiteSpec spec = jacdet::make_suite_spec(vf_suite);
            if (vf_opt_max_n->count()) spec.range.max_n = vf_max_n;
            if (vf_opt_primes->count()) spec.range.primes = vf_primes;
            if (vf_opt_seed->count()) spec.range.seed = vf_seed;

            std::optional<jacdet::VerifyCache> cache;
            if (!vf_cache.empty()) cache.emplace(vf_cache);
            jacdet::RunStats stats;
            std::vector<jacdet::VerifyRecord> records =
                jacdet::run_suite(spec, cache ? &*cache : nullptr, &stats);

            std::ofstream file;
            if (!vf_out.empty()) {
                file.open(vf_out);
                if (!file) throw std::invalid_argument("cannot open " + vf_out);
            }
            std::ostream& out = vf_out.empty() ? std::cout : file;
            if (vf_format == "csv")
                jacdet::write_csv_report(records, out, timings);
            else
                jacdet::write_json_report(records, out, timings);

            size_t failed = 0;
            for (const jacdet::VerifyRecord& rec : records) failed += rec.verdict == "fail";
            std::cerr << "suite " << vf_suite << ": " << records.size() << " records, "
                      << failed << " failed, " << stats.cache_hits << " cached";
            if (cache && cache->corrupt_lines())
                std::cerr << ", " << cache->corrupt_lines() << " corrupt cache lines skipped";
            std::cerr << "\n";
            return failed == 0 ? kOk : kCheckFailed;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
