#include "conglab/etaq.hpp"

namespace conglab {

QSeries QSeries::mul(const QSeries& other) const {
  const u64 n = degree();
  QSeries out(n);
  for (u64 i = 0; i <= n; ++i) {
    if (coeff_[i] == 0) continue;
    for (u64 j = 0; i + j <= n; ++j) {
      if (other[j] == 0) continue;
      out[i + j] += coeff_[i] * other[j];
    }
  }
  return out;
}

QSeries euler_factor(u64 a, u64 degree) {
  QSeries s(degree);
  // generalized pentagonal numbers g_j = j(3j-1)/2, j = 0, 1, -1, 2, -2, ...
  for (u64 j = 0;; ++j) {
    u64 g1 = j * (3 * j - 1) / 2;
    u64 g2 = j * (3 * j + 1) / 2;
    if (j > 0 && a * g1 > degree && a * g2 > degree) break;
    int sign = (j % 2 == 0) ? 1 : -1;
    if (a * g1 <= degree) s[a * g1] += sign;
    if (j > 0 && a * g2 <= degree) s[a * g2] += sign;
    if (j > degree) break;
  }
  return s;
}

QSeries euler_factor_naive(u64 a, u64 degree) {
  QSeries s(degree);
  s[0] = 1;
  for (u64 k = 1; a * k <= degree; ++k) {
    QSeries f(degree);
    f[0] = 1;
    f[a * k] = -1;
    s = s.mul(f);
  }
  return s;
}

std::vector<bigint> eta_quotient_coeffs(std::array<u64, 4> a, u64 degree) {
  if (degree < 1) throw std::invalid_argument("eta_quotient_coeffs: need degree >= 1");
  QSeries prod = euler_factor(a[0], degree - 1);
  for (int i = 1; i < 4; ++i) prod = prod.mul(euler_factor(a[i], degree - 1));
  std::vector<bigint> c(degree + 1);
  for (u64 n = 1; n <= degree; ++n) c[n] = prod[n - 1];
  return c;
}

}  // namespace conglab
