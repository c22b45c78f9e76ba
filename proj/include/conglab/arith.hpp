#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace conglab {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

inline u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// reduce a signed value into [0, m)
inline u64 reduce_mod(i64 a, u64 m) {
  i64 r = a % static_cast<i64>(m);
  if (r < 0) r += static_cast<i64>(m);
  return static_cast<u64>(r);
}

// inverse mod m for gcd(a,m)=1 (extended Euclid; m need not be prime)
u64 inv_mod(u64 a, u64 m);

// deterministic Miller-Rabin, valid for the full 64-bit range
bool is_prime_u64(u64 n);

// exactly the primes p with lo <= p <= hi and p > 3, ascending
std::vector<u64> primes_in(u64 lo, u64 hi);

// Jacobi symbol (a/n) for odd n > 0
int jacobi_symbol(i64 a, u64 n);

/// An odd prime p > 3 together with its quadratic-residue table.
class Prime {
 public:
  explicit Prime(u64 p);

  u64 value() const { return p_; }
  u64 p2() const { return p2_; }

  // Legendre symbol (a/p), table-backed, 0 iff p | a
  int legendre(i64 a) const { return qr_[reduce_mod(a, p_)]; }
  int legendre_u(u64 a) const { return qr_[a >= p_ ? a % p_ : a]; }

  u64 reduce(i64 a) const { return reduce_mod(a, p_); }
  u64 reduce2(i64 a) const { return reduce_mod(a, static_cast<i64>(p2_)); }

  u64 add(u64 a, u64 b) const { return addmod(a, b, p_); }
  u64 sub(u64 a, u64 b) const { return submod(a, b, p_); }
  u64 mul(u64 a, u64 b) const { return mulmod(a, b, p_); }
  u64 pow(u64 a, u64 e) const { return powmod(a, e, p_); }
  u64 inv(u64 a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return inv_[a >= p_ ? a % p_ : a];
  }

  u64 mul2(u64 a, u64 b) const { return mulmod(a, b, p2_); }
  u64 add2(u64 a, u64 b) const { return addmod(a, b, p2_); }
  u64 sub2(u64 a, u64 b) const { return submod(a, b, p2_); }
  u64 inv2(u64 a) const;  // inverse mod p^2

  // canonical square root r with r <= p - r, or nullopt when (a/p) = -1
  std::optional<u64> sqrt_mod(u64 a) const;

  // smallest quadratic non-residue
  u64 nonresidue() const;

 private:
  u64 p_;
  u64 p2_;
  std::vector<std::int8_t> qr_;
  std::vector<u64> inv_;
};

/// Element a + b*w of F_p[w], w^2 = d, (d/p) = -1.
struct QuadExtElem {
  u64 a = 0;
  u64 b = 0;
  bool operator==(const QuadExtElem&) const = default;
};

/// The quadratic extension F_p[w]/(w^2 - d) with a fixed non-residue d.
class QuadExt {
 public:
  QuadExt(const Prime& p, u64 d) : p_(&p), d_(d % p.value()) {
    if (p.legendre_u(d_) != -1) throw std::invalid_argument("extension parameter must be a non-residue");
  }

  const Prime& prime() const { return *p_; }
  u64 d() const { return d_; }

  using Elem = QuadExtElem;
  Elem zero() const { return {0, 0}; }
  Elem one() const { return {1, 0}; }
  Elem from_int(i64 v) const { return {p_->reduce(v), 0}; }
  Elem embed(u64 v) const { return {v % p_->value(), 0}; }
  // b*w, the generic square root carrier
  Elem omega_times(u64 b) const { return {0, b % p_->value()}; }

  Elem add(Elem x, Elem y) const { return {p_->add(x.a, y.a), p_->add(x.b, y.b)}; }
  Elem sub(Elem x, Elem y) const { return {p_->sub(x.a, y.a), p_->sub(x.b, y.b)}; }
  Elem neg(Elem x) const { return {p_->sub(0, x.a), p_->sub(0, x.b)}; }
  Elem mul(Elem x, Elem y) const {
    return {p_->add(p_->mul(x.a, y.a), p_->mul(d_, p_->mul(x.b, y.b))),
            p_->add(p_->mul(x.a, y.b), p_->mul(x.b, y.a))};
  }
  Elem scale(u64 k, Elem x) const { return {p_->mul(k % p_->value(), x.a), p_->mul(k % p_->value(), x.b)}; }
  u64 norm(Elem x) const { return p_->sub(p_->mul(x.a, x.a), p_->mul(d_, p_->mul(x.b, x.b))); }
  Elem inverse(Elem x) const {
    u64 n = norm(x);
    if (n == 0) throw std::domain_error("zero divisor");
    u64 ni = p_->inv(n);
    return {p_->mul(x.a, ni), p_->mul(p_->sub(0, x.b), ni)};
  }
  Elem pow(Elem x, u64 e) const {
    Elem r = one();
    while (e) {
      if (e & 1) r = mul(r, x);
      x = mul(x, x);
      e >>= 1;
    }
    return r;
  }
  bool eq(Elem x, Elem y) const { return x == y; }
  bool is_zero(Elem x) const { return x.a == 0 && x.b == 0; }

 private:
  const Prime* p_;
  u64 d_;
};

/// F_p presented with the same field interface as QuadExt, so generic
/// evaluators run over either.
class FpField {
 public:
  explicit FpField(const Prime& p) : p_(&p) {}
  const Prime& prime() const { return *p_; }

  using Elem = u64;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(i64 v) const { return p_->reduce(v); }
  Elem add(Elem x, Elem y) const { return p_->add(x, y); }
  Elem sub(Elem x, Elem y) const { return p_->sub(x, y); }
  Elem neg(Elem x) const { return p_->sub(0, x); }
  Elem mul(Elem x, Elem y) const { return p_->mul(x, y); }
  Elem scale(u64 k, Elem x) const { return p_->mul(k % p_->value(), x); }
  Elem inverse(Elem x) const {
    if (x == 0) throw std::domain_error("zero divisor");
    return p_->inv(x);
  }
  Elem pow(Elem x, u64 e) const { return p_->pow(x, e); }
  bool eq(Elem x, Elem y) const { return x == y; }
  bool is_zero(Elem x) const { return x == 0; }

 private:
  const Prime* p_;
};

/// Value u * p^e with u a unit mod p^2 (zero is unit=0, exp=0).
/// Mirrors exact p-adic valuation; reduction caps the exponent.
struct ScaledResidue {
  u64 unit = 0;
  int exp = 0;

  bool is_zero() const { return unit == 0; }
  static ScaledResidue zero() { return {0, 0}; }
  static ScaledResidue one() { return {1, 0}; }
};

// split v = unit * p^e (v != 0), unit reduced mod p^2
ScaledResidue scaled_from_int(i64 v, const Prime& p);
ScaledResidue scaled_mul(ScaledResidue x, ScaledResidue y, const Prime& p);
ScaledResidue scaled_div(ScaledResidue x, ScaledResidue y, const Prime& p);
// value mod p^2 (exp >= 2 collapses to 0)
u64 scaled_reduce_p2(ScaledResidue x, const Prime& p);
// value mod p
u64 scaled_reduce_p(ScaledResidue x, const Prime& p);

}  // namespace conglab
