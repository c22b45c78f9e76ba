#pragma once

#include "conglab/arith.hpp"
#include "conglab/combinat.hpp"

namespace conglab {

/// P_n(t) by the three-term recurrence (n+1)P_{n+1} = (2n+1)t P_n - n P_{n-1},
/// generically over F_p or F_p[w]. Requires n < p.
template <class Field>
typename Field::Elem legendre_eval(const Field& f, u64 n, typename Field::Elem t) {
  const u64 p = f.prime().value();
  if (n >= p) throw std::invalid_argument("legendre_eval: degree must be < p");
  auto p0 = f.one();
  if (n == 0) return p0;
  auto p1 = t;
  for (u64 k = 1; k < n; ++k) {
    auto a = f.scale((2 * k + 1) % p, f.mul(t, p1));
    auto b = f.scale(k % p, p0);
    auto p2 = f.scale(f.prime().inv((k + 1) % p), f.sub(a, b));
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

/// Murphy's form P_n(t) = sum_k C(n,k) C(n+k,k) ((t-1)/2)^k.
template <class Field>
typename Field::Elem legendre_eval_murphy(const Field& f, u64 n, typename Field::Elem t) {
  const Prime& pr = f.prime();
  if (n >= pr.value()) throw std::invalid_argument("legendre_eval_murphy: degree must be < p");
  FactorialTable ft(pr, 2 * n);
  auto half = f.scale(pr.inv(2), f.sub(t, f.one()));
  auto acc = f.zero();
  auto pw = f.one();
  for (u64 k = 0; k <= n; ++k) {
    u64 c = scaled_reduce_p(scaled_mul(ft.binom(n, k), ft.binom(n + k, k), pr), pr);
    acc = f.add(acc, f.scale(c, pw));
    pw = f.mul(pw, half);
  }
  return acc;
}

/// sum_{k<=[p/6]} C(6k,3k)C(3k,k) z^k  (mod p)
u64 trunc_sum_D_z(u64 z, const Prime& p);

/// Truncated sum  sum_{k<=[p/6]} C(6k,3k)C(3k,k) ((1-x)/864)^k  (mod p);
/// congruent to P_{[p/6]}(x).
u64 trunc_sum_864(u64 x, const Prime& p);

/// Jacobi polynomial P_n^{(0,beta)}(x) mod p for beta in {-1/2, +1/2},
/// via sum_k C(n,k) C(-n-beta-1,k) ((1-x)/2)^k with the generalized
/// binomial evaluated as a falling-factorial product.
enum class HalfInt { minus_half, plus_half };
u64 jacobi_eval(u64 n, HalfInt beta, u64 x, const Prime& p);

}  // namespace conglab
