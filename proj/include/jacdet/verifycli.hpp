#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace jacdet {

// Orchestration layer: named verification suites over parameter ranges,
// an append-only result cache, and report emission.

// Parameter bounds for a suite.  Which fields matter depends on the suite:
// n-bounded suites read max_n, prime-indexed suites read primes (for the
// character-matrix suites the entries are field sizes q, prime or prime
// squared), sampled suites read seed.  An empty bound yields no work.
struct SuiteRange {
    uint32_t max_n = 0;
    std::vector<uint64_t> primes;
    uint64_t seed = 0;
};

struct SuiteSpec {
    std::string suite_id;
    SuiteRange range;
};

// The registered suite ids, in canonical order.
const std::vector<std::string>& suite_catalog();

// Spec with the default (full-strength) range for the suite; throws
// std::invalid_argument on an unknown id.
SuiteSpec make_suite_spec(const std::string& suite_id);

// One checked parameter point.  verdict is "pass", "fail", or
// "not-applicable"; fail witnesses carry the counterexample values.
struct VerifyRecord {
    std::string suite_id;
    nlohmann::ordered_json params;
    std::string verdict;
    nlohmann::ordered_json witness;
    double elapsed_ms = 0.0;

    std::string key() const;  // suite_id + "|" + canonical params
    nlohmann::ordered_json to_json(bool with_timings = true) const;
    static std::optional<VerifyRecord> parse_json_line(const std::string& line);
};

// Append-only JSON-lines journal keyed by VerifyRecord::key(); on load the
// last record for a key wins and unparsable lines are counted and skipped.
class VerifyCache {
  public:
    explicit VerifyCache(std::string path);

    std::optional<VerifyRecord> get(const std::string& key) const;
    void put(const VerifyRecord& rec);  // appends to the journal immediately

    std::size_t size() const;
    std::size_t corrupt_lines() const;
    const std::string& path() const { return path_; }

  private:
    std::string path_;
    std::map<std::string, VerifyRecord> entries_;
    std::size_t corrupt_ = 0;
    mutable std::mutex mu_;
};

struct RunStats {
    std::size_t computed = 0;
    std::size_t cache_hits = 0;
};

// Runs every registered check of the suite over spec.range on a worker
// pool (workers == 0: JACDET_WORKERS env var, else hardware concurrency).
// The record sequence follows the canonical parameter order regardless of
// scheduling.  When a cache is given, hits skip recomputation and fresh
// results are appended.
std::vector<VerifyRecord> run_suite(const SuiteSpec& spec, VerifyCache* cache = nullptr,
                                    RunStats* stats = nullptr, unsigned workers = 0);

// JSON-lines report, one record per line; with_timings=false omits
// elapsed_ms so reruns are byte-identical.
void write_json_report(const std::vector<VerifyRecord>& records, std::ostream& out,
                       bool with_timings = true);

// CSV projection of the same records.
void write_csv_report(const std::vector<VerifyRecord>& records, std::ostream& out,
                      bool with_timings = true);

// JACDET_WORKERS, falling back to hardware concurrency, clamped to >= 1.
unsigned worker_count_from_env();

}  // namespace jacdet
