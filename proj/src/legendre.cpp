#include "conglab/legendre.hpp"

namespace conglab {

u64 trunc_sum_D_z(u64 z, const Prime& p) {
  const u64 pv = p.value();
  z %= pv;
  // ratio of consecutive D_k is 12(6k+1)(6k+5)/(k+1)^2, p-free for 6k+5 < p
  u64 acc = 0, term = 1, dk = 1;
  for (u64 k = 0; k <= pv / 6; ++k) {
    acc = p.add(acc, p.mul(dk, term));
    term = p.mul(term, z);
    u64 num = p.mul(p.mul(12, (6 * k + 1) % pv), (6 * k + 5) % pv);
    dk = p.mul(dk, p.mul(num, p.inv(p.mul((k + 1) % pv, (k + 1) % pv))));
  }
  return acc;
}

u64 trunc_sum_864(u64 x, const Prime& p) {
  return trunc_sum_D_z(p.mul(p.sub(1, x % p.value()), p.inv(864 % p.value())), p);
}

u64 jacobi_eval(u64 n, HalfInt beta, u64 x, const Prime& p) {
  const u64 pv = p.value();
  if (2 * n >= pv) throw std::invalid_argument("jacobi_eval: need n < p/2");
  const u64 half = p.inv(2);
  // top = -n - beta - 1 as a residue
  u64 b = (beta == HalfInt::minus_half) ? p.sub(0, half) : half;
  u64 top = p.sub(p.sub(p.reduce(-static_cast<i64>(n)), b), 1);
  const u64 z = p.mul(p.sub(1, x % pv), half);
  u64 acc = 0, pw = 1;
  u64 cnk = 1, cfall = 1;  // C(n,k), C(top,k) via falling factorials
  for (u64 k = 0; k <= n; ++k) {
    acc = p.add(acc, p.mul(p.mul(cnk, cfall), pw));
    pw = p.mul(pw, z);
    if (k < n) {
      cnk = p.mul(cnk, p.mul((n - k) % pv, p.inv((k + 1) % pv)));
      cfall = p.mul(cfall, p.mul(p.sub(top, k % pv), p.inv((k + 1) % pv)));
    }
  }
  return acc;
}

}  // namespace conglab
