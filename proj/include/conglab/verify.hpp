#pragma once

#include <map>
#include <memory>

#include "conglab/arith.hpp"
#include "conglab/charsum.hpp"
#include "conglab/checks.hpp"
#include "conglab/combinat.hpp"
#include "conglab/etaq.hpp"
#include "conglab/legendre.hpp"
#include "conglab/quadform.hpp"

namespace conglab {

/// q-expansions shared across primes (read-only once built).
struct EtaTables {
  u64 degree = 0;
  std::map<std::array<u64, 4>, std::vector<bigint>> series;

  const std::vector<bigint>& get(const std::array<u64, 4>& a) const { return series.at(a); }
  i64 coeff(const std::array<u64, 4>& a, u64 n) const {
    return static_cast<i64>(series.at(a).at(n));
  }
};

/// Builds the five newform tuples plus (2,4,6,12).
EtaTables build_eta_tables(u64 degree);

/// Per-prime working set shared by every check at that prime.
struct PrimeContext {
  Prime p;
  FactorialTable fact;             // up to 6(p-1)
  std::vector<ScaledResidue> T;    // ratio construction
  std::vector<ScaledResidue> D;
  std::vector<u64> T2, D2;         // reduced mod p^2
  std::vector<u64> franel;         // mod p^2
  std::vector<u64> central2;       // C(2n,n) mod p^2

  explicit PrimeContext(u64 pv);
};

// deterministic per-(seed, prime, tag) stream
struct SplitMix64 {
  u64 state;
  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};
u64 mix_seed(u64 seed, u64 p, u64 tag);

// ---- sums mod p^2 (x given mod p^2) ----
u64 sum_T_p2(const PrimeContext& c, u64 x);
u64 sum_D_p2(const PrimeContext& c, u64 x);
u64 sum_T_weighted_p2(const PrimeContext& c, u64 x, u64 a, u64 b);  // sum (ak+b) T_k x^k
u64 sum_Z_p2(const PrimeContext& c, u64 x);                         // sum C(2n,n) f_n x^n
u64 sum_Z_weighted_p2(const PrimeContext& c, u64 x, u64 a, u64 b);
u64 sum_T_p(const PrimeContext& c, u64 x);        // full sum mod p
u64 trunc_sum_T_p(const PrimeContext& c, u64 x);  // k <= [p/6]

// ---- theorem checks ----
CheckResult check_thm_2_1(const PrimeContext& c, i64 m, i64 n);
CheckResult check_thm_2_2(const PrimeContext& c, i64 m, i64 n);
CheckResult check_thm_2_3(const PrimeContext& c);
CheckResult check_thm_2_4(const PrimeContext& c);
CheckResult check_thm_2_5(const PrimeContext& c);
CheckResult check_thm_2_6(const PrimeContext& c, i64 m, i64 n);
std::vector<CheckResult> check_corollaries_2x(const PrimeContext& c, const EtaTables* eta);
CheckResult check_thm_3_1(const PrimeContext& c);
CheckResult check_thm_3_2(const PrimeContext& c);
CheckResult check_eq_3_3(const PrimeContext& c);
CheckResult check_lemma_3_3(const PrimeContext& c);
CheckResult check_thm_4_1(const PrimeContext& c, i64 m);
CheckResult check_thm_4_2(const PrimeContext& c, i64 m, i64 n);
CheckResult check_cor_3_1(const PrimeContext& c, i64 m);
std::vector<CheckResult> check_cm_supercongruences(const PrimeContext& c);

// ---- conjecture probes ----
std::vector<CheckResult> probe_conjecture_2_1(const PrimeContext& c, const EtaTables& eta);
CheckResult probe_eq_2_12(const PrimeContext& c, const EtaTables& eta);
std::vector<CheckResult> probe_conjecture_5_1(const PrimeContext& c);
std::vector<CheckResult> probe_conjecture_5_2(const PrimeContext& c);
std::vector<CheckResult> probe_conjecture_5_3(const PrimeContext& c);
std::vector<CheckResult> probe_Z_conjectures(const PrimeContext& c);  // 5.4-5.11

// ---- eta-quotient oracle ----
CheckResult check_etaq_eichler(const PrimeContext& c, const EtaTables& eta);

// ---- prime-independent (p = 0 in results) ----
std::vector<CheckResult> check_section3_global(long lemma31_bound, long wz_bound);

/// Re-verifies that no pass result carries differing witness sides.
/// Returns violations (empty = clean).
std::vector<CheckResult> self_audit(const std::vector<CheckResult>& results);

}  // namespace conglab
