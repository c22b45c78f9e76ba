#include "conglab/charsum.hpp"

namespace conglab {

i64 char_sum_cubic(i64 m, i64 n, const Prime& p) {
  const u64 pv = p.value();
  const u64 mm = p.reduce(m), nn = p.reduce(n);
  i64 s = 0;
  for (u64 x = 0; x < pv; ++x) {
    u64 v = p.add(p.mul(p.add(p.mul(x, x), mm), x), nn);
    s += p.legendre_u(v);
  }
  return s;
}

i64 char_sum_poly(const std::vector<i64>& coeffs, const Prime& p) {
  const u64 pv = p.value();
  std::vector<u64> c(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) c[i] = p.reduce(coeffs[i]);
  i64 s = 0;
  for (u64 x = 0; x < pv; ++x) {
    u64 v = 0;
    for (size_t i = c.size(); i-- > 0;) v = p.add(p.mul(v, x), c[i]);
    s += p.legendre_u(v);
  }
  return s;
}

i64 point_count(i64 m, i64 n, const Prime& p) {
  return static_cast<i64>(p.value()) + 1 + char_sum_cubic(m, n, p);
}

i64 point_count_11a(const Prime& p) {
  // y^2 + y = c  <=>  (2y+1)^2 = 4c + 1: 1 + chi(4c+1) solutions per x
  const u64 pv = p.value();
  i64 cnt = 0;
  for (u64 x = 0; x < pv; ++x) {
    u64 c = p.sub(p.mul(p.mul(x, x), x), p.mul(x, x));
    cnt += 1 + p.legendre_u(p.add(p.mul(4, c), 1));
  }
  return cnt;
}

i64 eichler_c(const Prime& p) { return static_cast<i64>(p.value()) - point_count_11a(p); }

QuarticImage quartic_image_count(const Prime& p) {
  const u64 pv = p.value();
  std::vector<bool> hit(pv, false);
  for (u64 x = 0; x < pv; ++x) {
    u64 x2 = p.mul(x, x);
    u64 v = p.add(p.sub(p.mul(x2, x2), p.mul(4, x2)), p.mul(4, x));
    hit[v] = true;
  }
  QuarticImage qi;
  qi.n_p = static_cast<i64>(std::count(hit.begin(), hit.end(), true));
  switch (pv % 40) {
    case 7: case 23: qi.delta = 0; qi.delta_defined = true; break;
    case 3: case 27: case 31: case 39: qi.delta = 1; qi.delta_defined = true; break;
    case 11: case 19: qi.delta = 2; qi.delta_defined = true; break;
    default: qi.delta = -1; qi.delta_defined = false; break;  // p = 1 mod 4
  }
  return qi;
}

}  // namespace conglab
