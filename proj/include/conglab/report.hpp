#pragma once

#include <array>

#include "conglab/verify.hpp"

namespace conglab {

inline constexpr const char* kEngineVersion = "0.1.0";
inline constexpr int kReportVersion = 1;

inline const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> s{"lemmas",   "theorems2",   "corollaries2", "section3",
                                          "section4", "conjectures", "etaq-oracle"};
  return s;
}

struct RunConfig {
  u64 prime_lo = 5;
  u64 prime_hi = 100;
  std::vector<std::string> suites = all_suites();
  int samples = 50;
  u64 thm31_bound = 499;
  u64 seed = 0;
  int workers = 1;
  std::string format = "json";  // json | csv
  std::string out_path;         // empty = stdout
};

struct RunReport {
  struct Row {
    std::string suite;
    CheckResult result;
  };
  std::vector<Row> rows;          // sorted by (p, check_id, suite)
  std::vector<size_t> findings;   // indices of conjecture-suite fails
  bool theorem_fail = false;
};

/// Executes the selected suites over primes_in(lo, hi). Deterministic for a
/// given config regardless of worker count.
RunReport run_suites(const RunConfig& cfg);

/// Serializes a report; byte-stable for identical inputs.
std::string report_emit(const RunReport& rep, const RunConfig& cfg);

/// Full pipeline: run, emit, write. Returns the process exit code
/// (0 = no theorem-suite failure; conjecture findings do not fail the run).
int run(const RunConfig& cfg);

}  // namespace conglab
