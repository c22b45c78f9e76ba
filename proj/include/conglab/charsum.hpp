#pragma once

#include "conglab/arith.hpp"

namespace conglab {

/// Curve y^2 = x^3 + m x + n over F_p.
struct CubicCurve {
  u64 m = 0;
  u64 n = 0;
  bool singular = false;  // 4m^3 + 27n^2 = 0 in F_p

  CubicCurve(i64 m_, i64 n_, const Prime& p)
      : m(p.reduce(m_)), n(p.reduce(n_)) {
    u64 disc = p.add(p.mul(4, p.mul(m, p.mul(m, m))), p.mul(27, p.mul(n, n)));
    singular = (disc == 0);
  }
};

/// S = sum_x ((x^3 + m x + n)/p), exact integer.
i64 char_sum_cubic(i64 m, i64 n, const Prime& p);

/// sum_x ((c3 x^3 + c2 x^2 + c1 x + c0)/p) for general lowdegree polynomials.
i64 char_sum_poly(const std::vector<i64>& coeffs, const Prime& p);

/// Affine point count #{(x,y): y^2 = x^3 + m x + n} + 1 = p + 1 + S.
i64 point_count(i64 m, i64 n, const Prime& p);

/// Affine points of y^2 + y = x^3 - x^2 over F_p.
i64 point_count_11a(const Prime& p);

/// p - point_count_11a(p).
i64 eichler_c(const Prime& p);

struct QuarticImage {
  i64 n_p = 0;          // |{x^4 - 4x^2 + 4x mod p}|
  int delta = -1;       // -1 = undefined (p = 1 mod 4)
  bool delta_defined = false;
};

/// Image size of x -> x^4 - 4x^2 + 4x and the three-case delta keyed on p mod 40.
QuarticImage quartic_image_count(const Prime& p);

}  // namespace conglab
