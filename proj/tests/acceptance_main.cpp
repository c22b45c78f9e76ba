// Acceptance suite: runs every gate criterion at its stated bound and prints
// one pass/fail line per criterion. Exit code = number of failed criteria.

#include <chrono>
#include <cstdio>
#include <string>

#include "conglab/report.hpp"

using namespace conglab;

namespace {

int g_failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

void report(int idx, const std::string& what, bool ok, double secs) {
  std::printf("%s criterion %2d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", idx, what.c_str(), secs);
  if (!ok) ++g_failures;
}

bool suites_clean(const RunConfig& cfg, std::string* why = nullptr) {
  auto rep = run_suites(cfg);
  for (const auto& row : rep.rows) {
    if (row.result.status == Status::fail) {
      if (why)
        *why = row.result.check_id + " at p=" + std::to_string(row.result.p);
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  // 1. lemma suites over 5 <= p <= 1000
  {
    Timer t;
    RunConfig cfg;
    cfg.prime_lo = 5;
    cfg.prime_hi = 1000;
    cfg.suites = {"lemmas"};
    cfg.workers = 4;
    std::string why;
    bool ok = suites_clean(cfg, &why);
    report(1, "lemma suites (2.1, 2.2, 3.2, 3.3) for 5 <= p <= 1000 " + why, ok, t.secs());
  }

  // 2. exhaustive-argument identity for p <= 500; bridge identities with
  //    50 seeded samples per prime, both square roots
  {
    Timer t;
    RunConfig cfg;
    cfg.prime_lo = 5;
    cfg.prime_hi = 500;
    cfg.suites = {"theorems2"};
    cfg.samples = 50;
    cfg.seed = 20260809;
    cfg.workers = 4;
    std::string why;
    bool ok = suites_clean(cfg, &why);
    report(2, "exhaustive-t and sampled bridge checks for 5 <= p <= 500 " + why, ok, t.secs());
  }

  // 3. exact integer identity to n = 300 and certificate to m = 200,
  //    plus the order-2 recurrence satisfied by both certificate sums
  {
    Timer t;
    bool ok = true;
    for (const auto& r : check_section3_global(300, 200)) ok = ok && r.status == Status::pass;
    for (int i = 1; i <= 2 && ok; ++i)
      for (long m = 0; m <= 200 && ok; ++m) ok = certificate_recurrence_check(i, m);
    report(3, "integer identity (n <= 300) and telescoping certificate (m <= 200)", ok, t.secs());
  }

  // 4. coefficientwise mod p^2 identity for 5 <= p <= 499
  {
    Timer t;
    bool ok = true;
    std::string why;
    for (u64 pv : primes_in(5, 499)) {
      PrimeContext c(pv);
      auto r = check_thm_3_1(c);
      if (r.status != Status::pass) {
        ok = false;
        why = " first failure p=" + std::to_string(pv);
        break;
      }
    }
    report(4, "coefficientwise product identity mod p^2 for 5 <= p <= 499" + why, ok, t.secs());
  }

  // 5. normalized-form sums for 5 <= p <= 1000 plus the Gauss congruence
  {
    Timer t;
    bool ok = true;
    std::string why;
    for (u64 pv : primes_in(5, 1000)) {
      PrimeContext c(pv);
      if (check_thm_3_2(c).status == Status::fail || check_eq_3_3(c).status == Status::fail) {
        ok = false;
        why = " sum check failed at p=" + std::to_string(pv);
        break;
      }
      if (pv % 4 == 1) {
        auto rr = represent(pv, 1, 1);
        FormRep rep = normalize(
            {1, 1, static_cast<i64>(rr->first), static_cast<i64>(rr->second), ""}, "gauss_a");
        if (c.fact.binom_p((pv - 1) / 2, (pv - 1) / 4) != c.p.reduce(2 * rep.x)) {
          ok = false;
          why = " gauss congruence failed at p=" + std::to_string(pv);
          break;
        }
      }
    }
    report(5, "864/1728 sums with normalized forms and Gauss congruence, p <= 1000" + why, ok,
           t.secs());
  }

  // 6. all eleven CM supercongruences for applicable p <= 1000, both branches
  {
    Timer t;
    bool ok = true;
    std::string why;
    u64 inert_44 = 0, split_44 = 0;
    for (u64 pv : primes_in(5, 1000)) {
      PrimeContext c(pv);
      for (const auto& r : check_cm_supercongruences(c)) {
        if (r.status == Status::fail) {
          ok = false;
          why = " " + r.check_id + " failed at p=" + std::to_string(pv);
        }
        if (r.check_id == "thm_4_4" && r.status == Status::pass) {
          if (r.params.at("branch") == "inert")
            ++inert_44;
          else
            ++split_44;
        }
      }
      if (!ok) break;
    }
    ok = ok && inert_44 > 0 && split_44 > 0;  // both branches exercised
    report(6, "CM supercongruences 4.3-4.13 for p <= 1000, both branches" + why, ok, t.secs());
  }

  // 7. Eichler relation for p <= 300
  {
    Timer t;
    EtaTables eta = build_eta_tables(300);
    bool ok = true;
    for (u64 pv : primes_in(5, 300)) {
      PrimeContext c(pv);
      if (check_etaq_eichler(c, eta).status != Status::pass) ok = false;
    }
    report(7, "eta coefficient = p - #points = twisted charsum for p <= 300", ok, t.secs());
  }

  // 8. conjecture probes for applicable p <= 500: zero counterexamples,
  //    complete witnesses
  {
    Timer t;
    RunConfig cfg;
    cfg.prime_lo = 5;
    cfg.prime_hi = 500;
    cfg.suites = {"conjectures"};
    cfg.workers = 4;
    auto rep = run_suites(cfg);
    bool ok = rep.findings.empty() && !rep.theorem_fail;
    size_t incomplete = 0;
    for (const auto& row : rep.rows) {
      if (row.result.status == Status::pass &&
          (!row.result.witness.count("lhs") || !row.result.witness.count("rhs")))
        ++incomplete;
      if (row.result.status == Status::skip && !row.result.witness.count("reason")) ++incomplete;
    }
    ok = ok && incomplete == 0;
    report(8, "conjecture probes (2.1, 2.12, 5.1-5.11) for p <= 500: no findings", ok, t.secs());
  }

  // 9. oracle equivalences
  {
    Timer t;
    bool ok = true;
    // franel recurrence = cube sums, p <= 100
    for (u64 pv : primes_in(5, 100)) {
      Prime p(pv);
      auto f = build_franel(p);
      for (u64 n = 0; n < pv; ++n)
        if (f[n] != franel_direct(n, p)) ok = false;
    }
    // ratio construction = factorial construction, p <= 200
    for (u64 pv : primes_in(5, 200)) {
      Prime p(pv);
      FactorialTable ft(p, 6 * (pv - 1));
      auto T = build_T(p), To = build_T_factorial(ft);
      for (u64 k = 0; k < pv; ++k)
        if (T[k].unit != To[k].unit || T[k].exp != To[k].exp) ok = false;
    }
    // evaluator agreement, p <= 50 exhaustive
    for (u64 pv : primes_in(5, 50)) {
      Prime p(pv);
      FpField f(p);
      for (u64 n = 0; n <= (pv - 1) / 2; ++n)
        for (u64 x = 0; x < pv; ++x)
          if (legendre_eval(f, n, x) != legendre_eval_murphy(f, n, x)) ok = false;
      for (u64 x = 0; x < pv; ++x)
        if (trunc_sum_864(x, p) != legendre_eval(f, pv / 6, x)) ok = false;
    }
    // Hasse bound across sampled curves
    SplitMix64 g{2026};
    for (u64 pv : primes_in(5, 1000)) {
      Prime p(pv);
      for (int i = 0; i < 10; ++i) {
        i64 m = static_cast<i64>(g.next() % pv), n = static_cast<i64>(g.next() % pv);
        if (CubicCurve(m, n, p).singular) continue;
        i64 S = char_sum_cubic(m, n, p);
        if (static_cast<double>(S < 0 ? -S : S) > 2.0 * std::sqrt(static_cast<double>(pv)))
          ok = false;
      }
    }
    report(9, "oracle equivalences (franel, T-ratio, evaluators, Hasse)", ok, t.secs());
  }

  // 10. byte-identical reports across worker counts
  {
    Timer t;
    RunConfig a;
    a.prime_lo = 5;
    a.prime_hi = 120;
    a.samples = 10;
    a.seed = 7;
    a.workers = 1;
    RunConfig b = a;
    b.workers = 6;
    std::string ra = report_emit(run_suites(a), a);
    std::string rb = report_emit(run_suites(b), b);
    report(10, "byte-identical reports for workers=1 vs workers=6", ra == rb, t.secs());
  }

  std::printf("%d of 10 criteria passed\n", 10 - g_failures);
  return g_failures;
}
