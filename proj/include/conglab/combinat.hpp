#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "conglab/arith.hpp"
#include "conglab/checks.hpp"

namespace conglab {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

bigint big_binom(long n, long k);
bigint big_factorial(long n);

/// n! for n in [0, bound] as ScaledResidue at p (unit mod p^2, exact p-exponent).
class FactorialTable {
 public:
  FactorialTable(const Prime& p, u64 bound);

  const Prime& prime() const { return *p_; }
  u64 bound() const { return fact_.size() - 1; }
  ScaledResidue factorial(u64 n) const { return fact_.at(n); }
  // C(n,k) as ScaledResidue; requires 0 <= k <= n <= bound
  ScaledResidue binom(u64 n, u64 k) const;
  u64 binom_p(u64 n, u64 k) const;   // reduced mod p
  u64 binom_p2(u64 n, u64 k) const;  // reduced mod p^2

 private:
  const Prime* p_;
  std::vector<ScaledResidue> fact_;
};

/// T_k = C(2k,k) C(3k,k) C(6k,3k) = (6k)!/(k!^3 (3k)!), k in [0, p-1],
/// built by the term ratio 24(2k+1)(6k+1)(6k+5)/(k+1)^3 with exact
/// p-power bookkeeping.
std::vector<ScaledResidue> build_T(const Prime& p);

/// D_k = C(3k,k) C(6k,3k) = (6k)!/(k!(2k)!(3k)!), ratio 12(6k+1)(6k+5)/(k+1)^2.
std::vector<ScaledResidue> build_D(const Prime& p);

/// Oracle construction of the same sequences straight from the factorial table.
std::vector<ScaledResidue> build_T_factorial(const FactorialTable& ft);
std::vector<ScaledResidue> build_D_factorial(const FactorialTable& ft);

/// Franel numbers f[n] = sum_k C(n,k)^3 mod p^2, n in [0, p-1], via
/// n^2 f[n] = (7n^2-7n+2) f[n-1] + 8(n-1)^2 f[n-2].
std::vector<u64> build_franel(const Prime& p);

/// Brute-force cube-sum oracle for f[n] mod p^2.
u64 franel_direct(u64 n, const Prime& p);

/// Both sides of the exact integer identity
///   sum_k T_k C(k,n-k)(-432)^{n-k} = sum_k D_k D_{n-k}.
std::pair<bigint, bigint> lemma31_sides(long n);

/// S_i(n) = sum_k F_i(n,k); exact integers.
bigint certificate_S(int i, long n);

/// Exact check of the telescoping certificate
///   (m+2)^3 F_i(m+2,k) - 24(2m+3)(18m^2+54m+41) F_i(m+1,k)
///     + 20736(m+1)(3m+1)(3m+5) F_i(m,k) = G_i(m,k+1) - G_i(m,k).
bool wz_certificate_check(int i, long m, long k);

/// Exact check of the order-2 recurrence satisfied by S_i.
bool certificate_recurrence_check(int i, long m);

CheckResult lemma21_check(const Prime& p);
CheckResult lemma22_check(const Prime& p);
CheckResult lemma32_check(const Prime& p, const std::vector<ScaledResidue>& D);

}  // namespace conglab
