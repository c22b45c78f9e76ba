#include <doctest.h>

#include <cmath>

#include "conglab/charsum.hpp"
#include "conglab/verify.hpp"

using namespace conglab;

namespace {

// brute-force point count of y^2 + y = x^3 - x^2
i64 count_11a_brute(const Prime& p) {
  const u64 pv = p.value();
  i64 n = 0;
  for (u64 x = 0; x < pv; ++x)
    for (u64 y = 0; y < pv; ++y)
      if (p.add(p.mul(y, y), y) == p.sub(p.mul(p.mul(x, x), x), p.mul(x, x))) ++n;
  return n;
}

}  // namespace

TEST_CASE("cubic character sums: fixed values") {
  Prime p5(5), p7(7);
  CHECK(char_sum_cubic(1, 0, p5) == -2);
  CHECK(char_sum_cubic(1, 2, p7) == 1);   // singular: 4 + 108 = 0 mod 7
  CHECK(char_sum_cubic(0, 0, p7) == 0);
  CHECK(point_count(1, 0, p5) == 4);
  CHECK(point_count(0, 0, p7) == 8);
  CHECK(point_count(-3, 2, p7) == 9);
}

TEST_CASE("singular curves: S = -((-2mn)/p) whenever 4m^3 + 27n^2 = 0, m != 0") {
  // singular family m = -3a^2, n = 2a^3
  for (u64 pv : primes_in(5, 500)) {
    Prime p(pv);
    for (u64 a = 1; a < std::min<u64>(pv, 12); ++a) {
      i64 m = -static_cast<i64>(p.mul(3, p.mul(a, a)));
      i64 n = static_cast<i64>(p.mul(2, p.mul(a, p.mul(a, a))));
      CubicCurve curve(m, n, p);
      REQUIRE(curve.singular);
      i64 S = char_sum_cubic(m, n, p);
      REQUIRE(S == -p.legendre(-2 * m * n));
    }
  }
}

TEST_CASE("Hasse bound on nonsingular curves") {
  SplitMix64 g{11};
  for (u64 pv : {5ull, 13ull, 101ull, 499ull, 997ull}) {
    Prime p(pv);
    for (int i = 0; i < 50; ++i) {
      i64 m = static_cast<i64>(g.next() % pv);
      i64 n = static_cast<i64>(g.next() % pv);
      CubicCurve curve(m, n, p);
      if (curve.singular) continue;
      i64 S = char_sum_cubic(m, n, p);
      REQUIRE(static_cast<double>(S < 0 ? -S : S) <= 2.0 * std::sqrt(static_cast<double>(pv)));
    }
  }
}

TEST_CASE("level-11 point count: closed form equals brute enumeration") {
  for (u64 pv : primes_in(5, 50)) {
    Prime p(pv);
    REQUIRE(point_count_11a(p) == count_11a_brute(p));
    REQUIRE(eichler_c(p) == static_cast<i64>(pv) - point_count_11a(p));
  }
}

TEST_CASE("quartic image count and the three-case delta") {
  Prime p7(7);
  auto qi7 = quartic_image_count(p7);
  // brute force image of x^4 - 4x^2 + 4x over F_7
  std::vector<bool> hit(7, false);
  for (u64 x = 0; x < 7; ++x) {
    u64 v = p7.reduce(static_cast<i64>(x * x * x * x) - 4 * static_cast<i64>(x * x) + 4 * static_cast<i64>(x));
    hit[v] = true;
  }
  i64 expect = std::count(hit.begin(), hit.end(), true);
  CHECK(qi7.n_p == expect);
  CHECK(quartic_image_count(Prime(11)).delta == 2);
  CHECK(quartic_image_count(Prime(23)).delta == 0);
  CHECK_FALSE(quartic_image_count(Prime(13)).delta_defined);  // p = 1 mod 4
}

TEST_CASE("shift and scale invariance of the quartic sum chain") {
  // sum chi((x^2+6x+2)(3x^2+16x)) = (2/p)[sum chi(x^3 + 51/4 x^2 + 17x + 6) - chi(6)]
  // and the depressed shift keeps the sum: ... = sum chi(x^3 - 595x + 5586)
  for (u64 pv : primes_in(5, 200)) {
    Prime p(pv);
    i64 A = char_sum_poly({0, 32, 102, 34, 3}, p);  // expanded quartic
    u64 c2 = p.mul(51, p.inv(4));
    i64 C = char_sum_poly({6, 17, static_cast<i64>(c2), 1}, p);
    i64 B = char_sum_cubic(-595, 5586, p);
    REQUIRE(C == B);
    REQUIRE(A == p.legendre(2) * (C - p.legendre(6)));
  }
}
