#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "conglab/report.hpp"

namespace {

bool parse_range(const std::string& s, conglab::u64& lo, conglab::u64& hi) {
  auto pos = s.find("..");
  if (pos == std::string::npos) return false;
  try {
    lo = std::stoull(s.substr(0, pos));
    hi = std::stoull(s.substr(pos + 2));
  } catch (...) {
    return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"congruence-lab: verification engine for Legendre-polynomial and "
               "binomial-sum congruences over prime ranges"};
  app.require_subcommand(1);

  auto* runcmd = app.add_subcommand("run", "run verification suites over a prime range");
  std::string primes = "5..100";
  std::string suites_arg;
  conglab::RunConfig cfg;
  if (const char* env = std::getenv("CONGRUENCE_LAB_WORKERS")) {
    cfg.workers = std::max(1, std::atoi(env));
  }
  runcmd->add_option("--primes", primes, "prime range LO..HI")->capture_default_str();
  runcmd->add_option("--suites", suites_arg,
                     "comma-separated suites: lemmas,theorems2,corollaries2,section3,"
                     "section4,conjectures,etaq-oracle (default: all)");
  runcmd->add_option("--samples", cfg.samples, "random (m,n) draws per prime")->capture_default_str();
  runcmd->add_option("--thm31-bound", cfg.thm31_bound,
                     "largest p for the coefficientwise product identity check")
      ->capture_default_str();
  runcmd->add_option("--seed", cfg.seed, "seed for the deterministic sample generator")
      ->capture_default_str();
  runcmd->add_option("--workers", cfg.workers,
                     "worker threads over primes (default: CONGRUENCE_LAB_WORKERS or 1)");
  runcmd->add_option("--format", cfg.format, "report format: json or csv")->capture_default_str();
  runcmd->add_option("--out", cfg.out_path, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (!parse_range(primes, cfg.prime_lo, cfg.prime_hi)) {
    std::cerr << "error: --primes expects LO..HI, got '" << primes << "'\n";
    return 2;
  }
  if (!suites_arg.empty()) {
    cfg.suites.clear();
    std::stringstream ss(suites_arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) cfg.suites.push_back(item);
    }
  }
  return conglab::run(cfg);
}
