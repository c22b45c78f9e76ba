#include <doctest.h>

#include "conglab/legendre.hpp"

using namespace conglab;

namespace {

// explicit-sum oracle: P_n(x) = 2^{-n} sum_{k<=n/2} C(n,k)(-1)^k C(2n-2k,n) x^{n-2k}
u64 legendre_explicit(const FactorialTable& ft, u64 n, u64 x) {
  const Prime& p = ft.prime();
  u64 acc = 0;
  for (u64 k = 0; k <= n / 2; ++k) {
    u64 term = p.mul(ft.binom_p(n, k), scaled_reduce_p(ft.binom(2 * n - 2 * k, n), p));
    term = p.mul(term, p.pow(x, n - 2 * k));
    acc = (k % 2 == 0) ? p.add(acc, term) : p.sub(acc, term);
  }
  return p.mul(acc, p.inv(p.pow(2, n)));
}

}  // namespace

TEST_CASE("recurrence evaluator: fixed values") {
  Prime p7(7);
  FpField f(p7);
  CHECK(legendre_eval(f, 1, 5ull) == 5);      // P_1(t) = t
  CHECK(legendre_eval(f, 3, 0ull) == 0);      // odd index at 0
  CHECK(legendre_eval(f, 2, 0ull) == 3);      // P_2(0) = -1/2 = 3 mod 7
  CHECK_THROWS(legendre_eval(f, 7, 1ull));
}

TEST_CASE("murphy evaluator: fixed values and agreement") {
  Prime p11(11);
  FpField f(p11);
  CHECK(legendre_eval_murphy(f, 0, 9ull) == 1);
  CHECK(legendre_eval_murphy(f, 1, 9ull) == 9);
  CHECK(legendre_eval_murphy(f, 4, 2ull) == legendre_eval(f, 4, 2ull));
}

TEST_CASE("parity: P_n(-t) = (-1)^n P_n(t)") {
  for (u64 pv : primes_in(5, 50)) {
    Prime p(pv);
    FpField f(p);
    for (u64 n = 0; n <= std::min<u64>(20, pv - 1); ++n) {
      for (u64 t = 0; t < pv; ++t) {
        u64 a = legendre_eval(f, n, t);
        u64 b = legendre_eval(f, n, p.sub(0, t));
        REQUIRE(b == (n % 2 == 0 ? a : p.sub(0, a)));
      }
    }
  }
}

TEST_CASE("evaluator agreement: recurrence = murphy = explicit sum, p <= 50") {
  for (u64 pv : primes_in(5, 50)) {
    Prime p(pv);
    FpField f(p);
    FactorialTable ft(p, 2 * (pv - 1));
    for (u64 n = 0; n <= (pv - 1) / 2; ++n) {
      for (u64 t = 0; t < pv; ++t) {
        u64 a = legendre_eval(f, n, t);
        REQUIRE(a == legendre_eval_murphy(f, n, t));
        REQUIRE(a == legendre_explicit(ft, n, t));
      }
    }
  }
}

TEST_CASE("truncated 864-sum: fixed values") {
  Prime p13(13), p11(11);
  CHECK(trunc_sum_864(1, p13) == 1);  // only k = 0 survives
  // x = 0: equals P_2(0) = -1/2 = C(2,1) * (-1/4) mod 13
  CHECK(trunc_sum_864(0, p13) == p13.reduce(-1 * (i64)p13.inv(2)));
  CHECK(trunc_sum_864(5, p11) == 5);  // [11/6] = 1, P_1(5)
}

TEST_CASE("truncated 864-sum equals P_[p/6] for all x, p <= 97") {
  for (u64 pv : primes_in(5, 97)) {
    Prime p(pv);
    FpField f(p);
    for (u64 x = 0; x < pv; ++x) REQUIRE(trunc_sum_864(x, p) == legendre_eval(f, pv / 6, x));
  }
}

TEST_CASE("jacobi polynomial: fixed values and half-index decomposition") {
  Prime p13(13);
  FpField f(p13);
  CHECK(jacobi_eval(0, HalfInt::minus_half, 7, p13) == 1);
  // P_{2n}(t) = P_n^{(0,-1/2)}(2t^2-1), P_{2n+1}(t) = t P_n^{(0,1/2)}(2t^2-1)
  for (u64 t = 1; t < 13; ++t) {
    u64 x = p13.sub(p13.mul(2, p13.mul(t, t)), 1);
    CHECK(legendre_eval(f, 2, t) == jacobi_eval(1, HalfInt::minus_half, x, p13));
    CHECK(legendre_eval(f, 3, t) == p13.mul(t, jacobi_eval(1, HalfInt::plus_half, x, p13)));
  }
}

TEST_CASE("jacobi polynomial: decomposition for all t, p <= 50") {
  for (u64 pv : primes_in(5, 50)) {
    Prime p(pv);
    FpField f(p);
    for (u64 n = 0; 2 * n + 1 < pv / 2; ++n) {
      for (u64 t = 0; t < pv; ++t) {
        u64 x = p.sub(p.mul(2, p.mul(t, t)), 1);
        REQUIRE(legendre_eval(f, 2 * n, t) == jacobi_eval(n, HalfInt::minus_half, x, p));
        REQUIRE(legendre_eval(f, 2 * n + 1, t) == p.mul(t, jacobi_eval(n, HalfInt::plus_half, x, p)));
      }
    }
  }
}

TEST_CASE("recurrence evaluator over the quadratic extension") {
  Prime p(13);
  QuadExt F(p, p.nonresidue());
  // parity over F_p2 as well
  for (u64 a = 0; a < 13; ++a) {
    QuadExtElem t{a, 1};
    auto v1 = legendre_eval(F, 5, t);
    auto v2 = legendre_eval(F, 5, F.neg(t));
    CHECK(v2 == F.neg(v1));
  }
}
