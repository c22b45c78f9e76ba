#include <doctest.h>

#include "conglab/arith.hpp"
#include "conglab/combinat.hpp"
#include "conglab/verify.hpp"

using namespace conglab;

TEST_CASE("legendre symbol: fixed values") {
  Prime p5(5), p7(7);
  CHECK(p5.legendre(0) == 0);
  CHECK(p7.legendre(2) == 1);   // 2^3 = 8 = 1 mod 7
  CHECK(p5.legendre(3) == -1);  // squares mod 5 are {1,4}
  CHECK(p7.legendre(-5) == p7.legendre(2));
}

TEST_CASE("legendre symbol: table equals Euler criterion for p <= 200") {
  for (u64 pv : primes_in(5, 200)) {
    Prime p(pv);
    for (u64 a = 0; a < pv; ++a) {
      u64 e = powmod(a, (pv - 1) / 2, pv);
      int expected = (a == 0) ? 0 : (e == 1 ? 1 : -1);
      REQUIRE(p.legendre_u(a) == expected);
    }
  }
}

TEST_CASE("sqrt_mod: fixed values and canonical root") {
  Prime p7(7);
  CHECK(p7.sqrt_mod(4) == 2);
  CHECK(p7.sqrt_mod(2) == 3);  // 3^2 = 9 = 2 mod 7
  CHECK_FALSE(p7.sqrt_mod(3).has_value());
  CHECK(p7.sqrt_mod(0) == 0);
}

TEST_CASE("sqrt_mod: exhaustive agreement with brute force for p <= 200") {
  for (u64 pv : primes_in(5, 200)) {
    Prime p(pv);
    for (u64 a = 0; a < pv; ++a) {
      u64 brute = pv;  // sentinel
      for (u64 r = 0; r <= pv / 2; ++r) {
        if (r * r % pv == a) {
          brute = r;
          break;
        }
      }
      auto got = p.sqrt_mod(a);
      if (brute == pv) {
        REQUIRE_FALSE(got.has_value());
      } else {
        REQUIRE(got.has_value());
        REQUIRE(*got == brute);
        REQUIRE(mulmod(*got, *got, pv) == a);
        REQUIRE(*got <= pv - *got);
      }
    }
  }
}

TEST_CASE("quadratic extension: fixed examples at p=5, d=3") {
  Prime p(5);
  QuadExt F(p, 3);
  QuadExtElem w{0, 1};
  CHECK(F.mul(w, w) == QuadExtElem{3, 0});   // w^2 = d
  QuadExtElem x{1, 1}, xc{1, 4};             // 1+w, 1-w
  CHECK(F.mul(x, xc) == QuadExtElem{3, 0});  // norm 1-3 = -2 = 3 mod 5
  CHECK(F.mul(F.one(), x) == x);
}

TEST_CASE("quadratic extension: x * x^-1 = 1 exhaustively for p <= 50") {
  for (u64 pv : primes_in(5, 50)) {
    Prime p(pv);
    QuadExt F(p, p.nonresidue());
    for (u64 a = 0; a < pv; ++a) {
      for (u64 b = 0; b < pv; ++b) {
        if (a == 0 && b == 0) continue;
        QuadExtElem x{a, b};
        REQUIRE(F.mul(x, F.inverse(x)) == F.one());
      }
    }
    CHECK_THROWS_AS(F.inverse(F.zero()), std::domain_error);
  }
}

TEST_CASE("quadratic extension: commutative and associative on random triples") {
  Prime p(101);
  QuadExt F(p, p.nonresidue());
  SplitMix64 g{42};
  for (int i = 0; i < 200; ++i) {
    QuadExtElem x{g.next() % 101, g.next() % 101};
    QuadExtElem y{g.next() % 101, g.next() % 101};
    QuadExtElem z{g.next() % 101, g.next() % 101};
    CHECK(F.mul(x, y) == F.mul(y, x));
    CHECK(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
    CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
  }
}

TEST_CASE("scaled residues: identity and p-power collapse") {
  Prime p(5);
  ScaledResidue one = ScaledResidue::one();
  ScaledResidue x{7, 0};
  CHECK(scaled_mul(x, one, p).unit == 7);
  ScaledResidue pe{1, 1};
  auto sq = scaled_mul(pe, pe, p);
  CHECK(sq.exp == 2);
  CHECK(scaled_reduce_p2(sq, p) == 0);  // p*p = 0 mod p^2
}

TEST_CASE("scaled residues: 10!/5! at p=5 equals 5^1 * 6048") {
  Prime p(5);
  FactorialTable ft(p, 10);
  auto q = scaled_div(ft.factorial(10), ft.factorial(5), p);
  CHECK(q.exp == 1);
  CHECK(q.unit == 6048 % 25);
  CHECK(scaled_reduce_p2(q, p) == 30240 % 25);
}

TEST_CASE("scaled residues: random binomials match exact arithmetic mod p^2") {
  SplitMix64 g{7};
  for (u64 pv : {5ull, 7ull, 13ull, 31ull}) {
    Prime p(pv);
    FactorialTable ft(p, 60);
    for (int i = 0; i < 50; ++i) {
      long n = 1 + static_cast<long>(g.next() % 60);
      long k = static_cast<long>(g.next() % (n + 1));
      bigint exact = big_binom(n, k);
      u64 expect = static_cast<u64>(exact % (pv * pv));
      REQUIRE(ft.binom_p2(n, k) == expect);
    }
  }
}

TEST_CASE("primes_in: bounds and counts") {
  CHECK(primes_in(5, 13) == std::vector<u64>{5, 7, 11, 13});
  CHECK(primes_in(24, 28).empty());
  CHECK(primes_in(5, 100).size() == 23);  // pi(100) = 25 minus {2, 3}
  CHECK(primes_in(2, 7) == std::vector<u64>{5, 7});
}

TEST_CASE("jacobi symbol matches legendre for prime modulus") {
  for (u64 pv : primes_in(5, 100)) {
    Prime p(pv);
    for (i64 a = -20; a <= 20; ++a) REQUIRE(jacobi_symbol(a, pv) == p.legendre(a));
  }
  CHECK(jacobi_symbol(13, 33) == -1);
  CHECK(jacobi_symbol(2, 15) == 1);
}

TEST_CASE("deterministic primality") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(999983));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(999981));
  CHECK_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to small bases
  CHECK_THROWS(Prime(4));
  CHECK_THROWS(Prime(3));
}

TEST_CASE("scaled division: zero divisor and exponent bookkeeping") {
  Prime p(7);
  ScaledResidue x{3, 2}, z = ScaledResidue::zero();
  CHECK_THROWS_AS(scaled_div(x, z, p), std::domain_error);
  CHECK(scaled_div(z, x, p).is_zero());
  auto q = scaled_div(x, ScaledResidue{3, 1}, p);
  CHECK(q.exp == 1);
  CHECK(q.unit == 1);
}
