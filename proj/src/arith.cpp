#include "conglab/arith.hpp"

#include <numeric>

namespace conglab {

u64 inv_mod(u64 a, u64 m) {
  i64 t = 0, nt = 1;
  i64 r = static_cast<i64>(m), nr = static_cast<i64>(a % m);
  while (nr != 0) {
    i64 q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw std::domain_error("inv_mod: not invertible");
  if (t < 0) t += static_cast<i64>(m);
  return static_cast<u64>(t);
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  // Sinclair base set: deterministic for all 64-bit n
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    u64 x = powmod(a % n, d, n);
    if (x <= 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<u64> primes_in(u64 lo, u64 hi) {
  std::vector<u64> out;
  if (hi < 5 || hi < lo) return out;
  lo = std::max<u64>(lo, 5);
  if (lo > hi) return out;
  std::vector<bool> comp(hi - lo + 1, false);
  for (u64 q = 2; q * q <= hi; ++q) {
    u64 start = std::max(q * q, ((lo + q - 1) / q) * q);
    for (u64 x = start; x <= hi; x += q) comp[x - lo] = true;
  }
  for (u64 x = lo; x <= hi; ++x)
    if (!comp[x - lo]) out.push_back(x);
  return out;
}

int jacobi_symbol(i64 a, u64 n) {
  if ((n & 1) == 0) throw std::invalid_argument("jacobi_symbol: even modulus");
  u64 x = reduce_mod(a, n);
  int r = 1;
  while (x != 0) {
    while ((x & 1) == 0) {
      x >>= 1;
      u64 m8 = n & 7;
      if (m8 == 3 || m8 == 5) r = -r;
    }
    std::swap(x, n);
    if ((x & 3) == 3 && (n & 3) == 3) r = -r;
    x %= n;
  }
  return n == 1 ? r : 0;
}

Prime::Prime(u64 p) : p_(p), p2_(p * p) {
  if (p <= 3 || !is_prime_u64(p)) throw std::invalid_argument("Prime: need an odd prime > 3");
  if (p >= (1ull << 31)) throw std::invalid_argument("Prime: p must be < 2^31 for mod p^2 arithmetic");
  qr_.assign(p, -1);
  qr_[0] = 0;
  for (u64 x = 1; x <= (p - 1) / 2; ++x) qr_[mulmod(x, x, p)] = 1;
  inv_.assign(p, 0);
  inv_[1] = 1;
  for (u64 i = 2; i < p; ++i) inv_[i] = mulmod(p - p / i, inv_[p % i], p);
}

u64 Prime::inv2(u64 a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of p-divisible value mod p^2");
  return inv_mod(a % p2_, p2_);
}

std::optional<u64> Prime::sqrt_mod(u64 a) const {
  a %= p_;
  if (a == 0) return 0;
  if (legendre_u(a) != 1) return std::nullopt;
  u64 r;
  if (p_ % 4 == 3) {
    r = pow(a, (p_ + 1) / 4);
  } else {
    // Tonelli-Shanks
    u64 q = p_ - 1;
    int s = 0;
    while ((q & 1) == 0) q >>= 1, ++s;
    u64 z = nonresidue();
    u64 m = s;
    u64 c = pow(z, q);
    u64 t = pow(a, q);
    r = pow(a, (q + 1) / 2);
    while (t != 1) {
      u64 t2 = t;
      u64 i = 0;
      while (t2 != 1) {
        t2 = mul(t2, t2);
        ++i;
      }
      u64 b = c;
      for (u64 j = 0; j + i + 1 < m; ++j) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
  }
  if (r > p_ - r) r = p_ - r;
  return r;
}

u64 Prime::nonresidue() const {
  for (u64 x = 2; x < p_; ++x) {
    if (qr_[x] == -1) return x;
  }
  throw std::logic_error("no non-residue found");
}

ScaledResidue scaled_from_int(i64 v, const Prime& p) {
  if (v == 0) return ScaledResidue::zero();
  bool neg = v < 0;
  u64 av = neg ? static_cast<u64>(-v) : static_cast<u64>(v);
  int e = 0;
  while (av % p.value() == 0) {
    av /= p.value();
    ++e;
  }
  u64 unit = av % p.p2();
  if (neg) unit = p.sub2(0, unit);
  return {unit, e};
}

ScaledResidue scaled_mul(ScaledResidue x, ScaledResidue y, const Prime& p) {
  if (x.is_zero() || y.is_zero()) return ScaledResidue::zero();
  return {p.mul2(x.unit, y.unit), x.exp + y.exp};
}

ScaledResidue scaled_div(ScaledResidue x, ScaledResidue y, const Prime& p) {
  if (y.is_zero()) throw std::domain_error("scaled_div: division by zero");
  if (x.is_zero()) return ScaledResidue::zero();
  return {p.mul2(x.unit, p.inv2(y.unit)), x.exp - y.exp};
}

u64 scaled_reduce_p2(ScaledResidue x, const Prime& p) {
  if (x.is_zero() || x.exp >= 2) return 0;
  u64 v = x.unit;
  for (int i = 0; i < x.exp; ++i) v = p.mul2(v, p.value());
  return v;
}

u64 scaled_reduce_p(ScaledResidue x, const Prime& p) {
  if (x.is_zero() || x.exp >= 1) return 0;
  return x.unit % p.value();
}

}  // namespace conglab
