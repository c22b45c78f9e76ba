#pragma once

#include <array>

#include "conglab/combinat.hpp"

namespace conglab {

/// Truncated integer power series, coefficients for exponents 0..N.
class QSeries {
 public:
  explicit QSeries(u64 degree) : coeff_(degree + 1) {}

  u64 degree() const { return coeff_.size() - 1; }
  bigint& operator[](u64 i) { return coeff_.at(i); }
  const bigint& operator[](u64 i) const { return coeff_.at(i); }

  QSeries mul(const QSeries& other) const;

 private:
  std::vector<bigint> coeff_;
};

/// prod_{k>=1} (1 - q^{a k}) to degree N, by the pentagonal number expansion.
QSeries euler_factor(u64 a, u64 degree);

/// Naive truncated product of the first factors (independent oracle).
QSeries euler_factor_naive(u64 a, u64 degree);

/// c(a1,a2,a3,a4; n) for n = 1..N of q * prod_i prod_k (1 - q^{a_i k}).
/// Index 0 is unused (0); c[1] = 1.
std::vector<bigint> eta_quotient_coeffs(std::array<u64, 4> a, u64 degree);

}  // namespace conglab
