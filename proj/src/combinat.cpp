#include "conglab/combinat.hpp"

namespace conglab {

bigint big_binom(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  bigint r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

bigint big_factorial(long n) {
  bigint r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

FactorialTable::FactorialTable(const Prime& p, u64 bound) : p_(&p) {
  fact_.resize(bound + 1);
  fact_[0] = ScaledResidue::one();
  for (u64 n = 1; n <= bound; ++n) {
    u64 m = n;
    int e = 0;
    while (m % p.value() == 0) m /= p.value(), ++e;
    fact_[n] = {p.mul2(fact_[n - 1].unit, m % p.p2()), fact_[n - 1].exp + e};
  }
}

ScaledResidue FactorialTable::binom(u64 n, u64 k) const {
  if (k > n || n > bound()) throw std::out_of_range("binom: arguments out of table range");
  return scaled_div(fact_[n], scaled_mul(fact_[k], fact_[n - k], *p_), *p_);
}

u64 FactorialTable::binom_p(u64 n, u64 k) const { return scaled_reduce_p(binom(n, k), *p_); }
u64 FactorialTable::binom_p2(u64 n, u64 k) const { return scaled_reduce_p2(binom(n, k), *p_); }

namespace {

// multiply x by integer factor f > 0 with p-powers split off
ScaledResidue mul_factor(ScaledResidue x, u64 f, const Prime& p) {
  int e = 0;
  while (f % p.value() == 0) f /= p.value(), ++e;
  return {p.mul2(x.unit, f % p.p2()), x.exp + e};
}

}  // namespace

std::vector<ScaledResidue> build_T(const Prime& p) {
  const u64 pv = p.value();
  std::vector<ScaledResidue> T(pv);
  T[0] = ScaledResidue::one();
  for (u64 k = 0; k + 1 < pv; ++k) {
    ScaledResidue t = mul_factor(T[k], 24, p);
    t = mul_factor(t, 2 * k + 1, p);
    t = mul_factor(t, 6 * k + 1, p);
    t = mul_factor(t, 6 * k + 5, p);
    u64 den = p.inv2((k + 1) % p.p2());  // k+1 < p, p-free
    u64 den3 = p.mul2(p.mul2(den, den), den);
    T[k + 1] = {p.mul2(t.unit, den3), t.exp};
  }
  return T;
}

std::vector<ScaledResidue> build_D(const Prime& p) {
  const u64 pv = p.value();
  std::vector<ScaledResidue> D(pv);
  D[0] = ScaledResidue::one();
  for (u64 k = 0; k + 1 < pv; ++k) {
    ScaledResidue t = mul_factor(D[k], 12, p);
    t = mul_factor(t, 6 * k + 1, p);
    t = mul_factor(t, 6 * k + 5, p);
    u64 den = p.inv2((k + 1) % p.p2());
    u64 den2 = p.mul2(den, den);
    D[k + 1] = {p.mul2(t.unit, den2), t.exp};
  }
  return D;
}

std::vector<ScaledResidue> build_T_factorial(const FactorialTable& ft) {
  const Prime& p = ft.prime();
  std::vector<ScaledResidue> T(p.value());
  for (u64 k = 0; k < p.value(); ++k) {
    ScaledResidue f3 = ft.factorial(k);
    ScaledResidue den = scaled_mul(scaled_mul(f3, f3, p), scaled_mul(f3, ft.factorial(3 * k), p), p);
    T[k] = scaled_div(ft.factorial(6 * k), den, p);
  }
  return T;
}

std::vector<ScaledResidue> build_D_factorial(const FactorialTable& ft) {
  const Prime& p = ft.prime();
  std::vector<ScaledResidue> D(p.value());
  for (u64 k = 0; k < p.value(); ++k) {
    ScaledResidue den =
        scaled_mul(ft.factorial(k), scaled_mul(ft.factorial(2 * k), ft.factorial(3 * k), p), p);
    D[k] = scaled_div(ft.factorial(6 * k), den, p);
  }
  return D;
}

std::vector<u64> build_franel(const Prime& p) {
  const u64 pv = p.value(), p2 = p.p2();
  std::vector<u64> f(pv);
  f[0] = 1;
  if (pv > 1) f[1] = 2;
  for (u64 n = 2; n < pv; ++n) {
    u64 n2 = mulmod(n, n, p2);
    u64 a = addmod(submod(mulmod(7, n2, p2), mulmod(7, n, p2), p2), 2, p2);
    u64 b = mulmod(mulmod(8, mulmod(n - 1, n - 1, p2), p2), f[n - 2], p2);
    u64 rhs = addmod(mulmod(a, f[n - 1], p2), b, p2);
    f[n] = mulmod(rhs, p.inv2(n2), p2);
  }
  return f;
}

u64 franel_direct(u64 n, const Prime& p) {
  const u64 p2 = p.p2();
  // Pascal row mod p^2; n < p so every entry is p-free and exact
  std::vector<u64> row(n + 1);
  row[0] = 1;
  for (u64 i = 1; i <= n; ++i) {
    row[i] = 1;
    for (u64 j = i - 1; j >= 1; --j) row[j] = addmod(row[j], row[j - 1], p2);
  }
  u64 s = 0;
  for (u64 k = 0; k <= n; ++k) s = addmod(s, mulmod(row[k], mulmod(row[k], row[k], p2), p2), p2);
  return s;
}

namespace {

// cached exact tables for the certificate and product-identity checks
struct CertTables {
  long bound;
  std::vector<bigint> T, D, pow432;  // (-432)^j at pow432[j]
  std::vector<std::vector<bigint>> pascal;

  explicit CertTables(long n) : bound(n) {
    T.resize(n + 1);
    D.resize(n + 1);
    pow432.resize(n + 1);
    pascal.resize(n + 1);
    pow432[0] = 1;
    for (long j = 1; j <= n; ++j) pow432[j] = pow432[j - 1] * -432;
    for (long k = 0; k <= n; ++k) {
      pascal[k].resize(k + 1);
      pascal[k][0] = 1;
      for (long j = 1; j <= k; ++j)
        pascal[k][j] = pascal[k - 1][j - 1] + (j < k ? pascal[k - 1][j] : 0);
    }
    for (long k = 0; k <= n; ++k) {
      D[k] = big_binom(3 * k, k) * big_binom(6 * k, 3 * k);
      T[k] = big_binom(2 * k, k) * D[k];
    }
  }

  bigint binom(long n, long k) const {
    if (k < 0 || n < 0 || k > n) return 0;
    if (n <= bound) return pascal[n][k];
    return big_binom(n, k);
  }
};

const CertTables& cert_tables() {
  static const CertTables t(320);
  return t;
}

bigint big_T(long k) {
  const auto& t = cert_tables();
  if (k <= t.bound) return t.T[k];
  return big_binom(2 * k, k) * big_binom(3 * k, k) * big_binom(6 * k, 3 * k);
}

bigint big_D(long k) {
  const auto& t = cert_tables();
  if (k <= t.bound) return t.D[k];
  return big_binom(3 * k, k) * big_binom(6 * k, 3 * k);
}

bigint pow_int(bigint b, long e) {
  bigint r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bigint pow432_at(long j) {
  const auto& t = cert_tables();
  if (j >= 0 && j <= t.bound) return t.pow432[j];
  return pow_int(-432, j);
}

bigrat F_term(int i, long m, long k) {
  if (k < 0 || k > m) return 0;
  const auto& t = cert_tables();
  if (i == 1) return bigrat(big_T(k) * t.binom(k, m - k) * pow432_at(m - k));
  return bigrat(big_D(k) * big_D(m - k));
}

bigrat G_term(int i, long m, long k) {
  if (k <= 0 || k > m + 1) return 0;
  const auto& t = cert_tables();
  if (i == 1) {
    bigint num = bigint(186624) * k * k * (m + 2) * (m + 1 - 2 * k);
    bigrat coeff(num, bigint(k + 1));
    bigint core = big_T(k) * t.binom(k + 1, m + 2 - k);
    // (-432)^{m-k} can have exponent -1 at k = m+1; keep it rational
    bigrat pw = (m - k >= 0) ? bigrat(pow432_at(m - k)) : bigrat(bigint(-1), bigint(432));
    return coeff * bigrat(core) * pw;
  }
  bigint num = bigint(12) * k * k * (36 * m * m - 36 * m * k + 129 * m - 62 * k + 114);
  bigrat coeff(num, bigint(m - k + 2) * (m - k + 2));
  bigint core = big_D(k) * big_D(m - k + 1);
  return coeff * bigrat(core);
}

}  // namespace

std::pair<bigint, bigint> lemma31_sides(long n) {
  const auto& t = cert_tables();
  bigint lhs = 0, rhs = 0;
  for (long k = 0; k <= n; ++k) {
    lhs += big_T(k) * t.binom(k, n - k) * pow432_at(n - k);
    rhs += big_D(k) * big_D(n - k);
  }
  return {lhs, rhs};
}

bigint certificate_S(int i, long n) {
  bigrat s = 0;
  for (long k = 0; k <= n; ++k) s += F_term(i, n, k);
  return boost::multiprecision::numerator(s);  // integral by construction
}

bool wz_certificate_check(int i, long m, long k) {
  bigrat lhs = bigrat(pow_int(m + 2, 3)) * F_term(i, m + 2, k) -
               bigrat(bigint(24) * (2 * m + 3) * (18 * m * m + 54 * m + 41)) * F_term(i, m + 1, k) +
               bigrat(bigint(20736) * (m + 1) * (3 * m + 1) * (3 * m + 5)) * F_term(i, m, k);
  bigrat rhs = G_term(i, m, k + 1) - G_term(i, m, k);
  return lhs == rhs;
}

bool certificate_recurrence_check(int i, long m) {
  bigint lhs = pow_int(m + 2, 3) * certificate_S(i, m + 2) -
               bigint(24) * (2 * m + 3) * (18 * m * m + 54 * m + 41) * certificate_S(i, m + 1) +
               bigint(20736) * (m + 1) * (3 * m + 1) * (3 * m + 5) * certificate_S(i, m);
  return lhs == 0;
}

namespace {

void fail_witness(CheckResult& r, const std::string& which, u64 k, u64 lhs, u64 rhs, u64 mod) {
  r.status = Status::fail;
  r.witness["part"] = which;
  r.witness["k"] = std::to_string(k);
  r.witness["lhs"] = std::to_string(lhs);
  r.witness["rhs"] = std::to_string(rhs);
  r.witness["modulus"] = std::to_string(mod);
}

}  // namespace

CheckResult lemma21_check(const Prime& p) {
  CheckResult r;
  r.check_id = "lemma_2_1";
  r.p = p.value();
  const u64 pv = p.value();
  FactorialTable ft(p, 6 * (pv - 1));
  u64 last_l = 1, last_r = 1;
  for (u64 k = 0; k <= (pv - 1) / 2; ++k) {
    u64 lhs = ft.binom_p((pv - 1) / 2, k);
    u64 rhs = p.mul(ft.binom_p(2 * k, k), p.inv(p.pow(p.reduce(-4), k)));
    if (lhs != rhs) {
      fail_witness(r, "i", k, lhs, rhs, pv);
      return r;
    }
    last_l = lhs, last_r = rhs;
  }
  for (u64 k = 0; k <= pv / 3; ++k) {
    u64 half = (pv - 1) / 2;
    u64 lhs = (2 * k > half - k) ? 0 : ft.binom_p(half - k, 2 * k);
    u64 num = scaled_reduce_p(scaled_mul(ft.binom(6 * k, 3 * k), ft.binom(3 * k, k), p), p);
    u64 rhs = p.mul(num, p.inv(p.mul(p.pow(4, 2 * k), ft.binom_p(2 * k, k))));
    if (lhs != rhs) {
      fail_witness(r, "ii", k, lhs, rhs, pv);
      return r;
    }
    lhs = ft.binom_p(pv / 3 + k, 2 * k);
    rhs = p.mul(scaled_reduce_p(ft.binom(3 * k, k), p), p.inv(p.pow(p.reduce(-27), k)));
    if (lhs != rhs) {
      fail_witness(r, "iii", k, lhs, rhs, pv);
      return r;
    }
    last_l = lhs, last_r = rhs;
  }
  r.witness["lhs"] = std::to_string(last_l);
  r.witness["rhs"] = std::to_string(last_r);
  r.witness["modulus"] = std::to_string(pv);
  return r;
}

CheckResult lemma22_check(const Prime& p) {
  CheckResult r;
  r.check_id = "lemma_2_2";
  r.p = p.value();
  const u64 pv = p.value();
  FactorialTable ft(p, pv);
  const u64 p6 = pv / 6, p3 = pv / 3;
  const int sym3 = jacobi_symbol(static_cast<i64>(pv), 3);  // (p/3)
  const u64 e = (1 - sym3) / 2;
  u64 last_l = 0, last_r = 0;
  for (u64 k = 0; k <= pv / 12; ++k) {
    u64 lhs = p.mul(ft.binom_p(p6, k), ft.binom_p(2 * p6 - 2 * k, p6));
    u64 sgn = (p6 % 2 == 0) ? 1 : pv - 1;
    u64 rhs = p.mul(sgn, p.pow(3, 3 * k + e));
    rhs = p.mul(rhs, p.pow(4, p6 - k));
    rhs = p.mul(rhs, ft.binom_p((pv - 1) / 2, p3 - k));
    u64 top = static_cast<u64>((static_cast<i64>(pv) - sym3) / 6);  // (p - (p/3))/6
    rhs = p.mul(rhs, ft.binom_p(top + k, 3 * k + e));
    if (lhs != rhs) {
      fail_witness(r, "", k, lhs, rhs, pv);
      return r;
    }
    last_l = lhs, last_r = rhs;
  }
  r.witness["lhs"] = std::to_string(last_l);
  r.witness["rhs"] = std::to_string(last_r);
  r.witness["modulus"] = std::to_string(pv);
  return r;
}

CheckResult lemma32_check(const Prime& p, const std::vector<ScaledResidue>& D) {
  CheckResult r;
  r.check_id = "lemma_3_2";
  r.p = p.value();
  const u64 pv = p.value();
  // suffix minimum of exponents: minexp[j] = min_{r >= j} v_p(D_r)
  std::vector<int> minexp(pv + 1, 1 << 20);
  for (u64 j = pv; j-- > 1;) minexp[j] = std::min(minexp[j + 1], D[j].exp);
  for (u64 k = 1; k < pv; ++k) {
    if (D[k].exp + minexp[pv - k] < 2) {
      u64 worst = pv - k;
      for (u64 rr = pv - k; rr < pv; ++rr)
        if (D[rr].exp < D[worst].exp) worst = rr;
      r.status = Status::fail;
      r.witness["k"] = std::to_string(k);
      r.witness["r"] = std::to_string(worst);
      r.witness["valuation_sum"] = std::to_string(D[k].exp + D[worst].exp);
      r.witness["required"] = "2";
      return r;
    }
  }
  r.witness["required"] = "valuation sum >= 2 for all k+r >= p";
  return r;
}

}  // namespace conglab
