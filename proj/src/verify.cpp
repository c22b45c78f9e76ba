#include "conglab/verify.hpp"

#include <algorithm>
#include <sstream>

namespace conglab {

namespace {

std::string fp2_str(const QuadExtElem& e) {
  return std::to_string(e.a) + "+" + std::to_string(e.b) + "w";
}

CheckResult make_check(std::string id, u64 p) {
  CheckResult r;
  r.check_id = std::move(id);
  r.p = p;
  return r;
}

void set_pass_sides(CheckResult& r, const std::string& lhs, const std::string& rhs,
                    const std::string& modulus) {
  r.witness["lhs"] = lhs;
  r.witness["rhs"] = rhs;
  r.witness["modulus"] = modulus;
}

void set_fail(CheckResult& r, const std::string& lhs, const std::string& rhs,
              const std::string& modulus) {
  r.status = Status::fail;
  set_pass_sides(r, lhs, rhs, modulus);
}

void set_skip(CheckResult& r, const std::string& reason) {
  r.status = Status::skip;
  r.witness["reason"] = reason;
}

}  // namespace

EtaTables build_eta_tables(u64 degree) {
  EtaTables t;
  t.degree = degree;
  const std::array<std::array<u64, 4>, 6> tuples{{{1, 1, 11, 11},
                                                  {2, 2, 10, 10},
                                                  {1, 3, 5, 15},
                                                  {1, 2, 7, 14},
                                                  {4, 4, 8, 8},
                                                  {2, 4, 6, 12}}};
  for (const auto& a : tuples) t.series[a] = eta_quotient_coeffs(a, degree);
  return t;
}

PrimeContext::PrimeContext(u64 pv)
    : p(pv), fact(p, 6 * (pv - 1)), T(build_T(p)), D(build_D(p)), franel(build_franel(p)) {
  T2.resize(pv);
  D2.resize(pv);
  central2.resize(pv);
  for (u64 k = 0; k < pv; ++k) {
    T2[k] = scaled_reduce_p2(T[k], p);
    D2[k] = scaled_reduce_p2(D[k], p);
    central2[k] = fact.binom_p2(2 * k, k);
  }
}

u64 mix_seed(u64 seed, u64 p, u64 tag) {
  SplitMix64 g{seed ^ (p * 0x9e3779b97f4a7c15ull) ^ (tag << 32)};
  g.next();
  return g.next();
}

u64 sum_T_p2(const PrimeContext& c, u64 x) {
  const u64 p2 = c.p.p2();
  u64 acc = 0, pw = 1;
  for (u64 k = 0; k < c.p.value(); ++k) {
    acc = addmod(acc, mulmod(c.T2[k], pw, p2), p2);
    pw = mulmod(pw, x, p2);
  }
  return acc;
}

u64 sum_D_p2(const PrimeContext& c, u64 x) {
  const u64 p2 = c.p.p2();
  u64 acc = 0, pw = 1;
  for (u64 k = 0; k < c.p.value(); ++k) {
    acc = addmod(acc, mulmod(c.D2[k], pw, p2), p2);
    pw = mulmod(pw, x, p2);
  }
  return acc;
}

u64 sum_T_weighted_p2(const PrimeContext& c, u64 x, u64 a, u64 b) {
  const u64 p2 = c.p.p2();
  u64 acc = 0, pw = 1;
  for (u64 k = 0; k < c.p.value(); ++k) {
    u64 w = addmod(mulmod(a % p2, k, p2), b % p2, p2);
    acc = addmod(acc, mulmod(w, mulmod(c.T2[k], pw, p2), p2), p2);
    pw = mulmod(pw, x, p2);
  }
  return acc;
}

u64 sum_Z_p2(const PrimeContext& c, u64 x) {
  const u64 p2 = c.p.p2();
  u64 acc = 0, pw = 1;
  for (u64 n = 0; n < c.p.value(); ++n) {
    acc = addmod(acc, mulmod(mulmod(c.central2[n], c.franel[n], p2), pw, p2), p2);
    pw = mulmod(pw, x, p2);
  }
  return acc;
}

u64 sum_Z_weighted_p2(const PrimeContext& c, u64 x, u64 a, u64 b) {
  const u64 p2 = c.p.p2();
  u64 acc = 0, pw = 1;
  for (u64 n = 0; n < c.p.value(); ++n) {
    u64 w = addmod(mulmod(a % p2, n, p2), b % p2, p2);
    acc = addmod(acc, mulmod(w, mulmod(mulmod(c.central2[n], c.franel[n], p2), pw, p2), p2), p2);
    pw = mulmod(pw, x, p2);
  }
  return acc;
}

u64 sum_T_p(const PrimeContext& c, u64 x) {
  const Prime& p = c.p;
  u64 acc = 0, pw = 1;
  for (u64 k = 0; k < p.value(); ++k) {
    acc = p.add(acc, p.mul(c.T2[k] % p.value(), pw));
    pw = p.mul(pw, x);
  }
  return acc;
}

u64 trunc_sum_T_p(const PrimeContext& c, u64 x) {
  const Prime& p = c.p;
  u64 acc = 0, pw = 1;
  for (u64 k = 0; k <= p.value() / 6; ++k) {
    acc = p.add(acc, p.mul(c.T2[k] % p.value(), pw));
    pw = p.mul(pw, x);
  }
  return acc;
}

// -------------------------------------------------------------------------
// Theorem 2.1
// -------------------------------------------------------------------------

CheckResult check_thm_2_1(const PrimeContext& c, i64 m, i64 n) {
  const Prime& p = c.p;
  auto r = make_check("thm_2_1", p.value());
  r.params["m"] = std::to_string(m);
  r.params["n"] = std::to_string(n);
  if (p.reduce(m) == 0) {
    set_skip(r, "m = 0 mod p");
    return r;
  }
  const i64 S = char_sum_cubic(m, n, p);
  const u64 Sr = p.reduce(S);
  const u64 q = p.reduce(-3 * m);
  const u64 coef = p.mul(3 % p.value(), p.mul(p.reduce(n), p.inv(p.mul(2, p.mul(p.reduce(m), p.reduce(m))))));
  const bool p1mod4 = (p.value() % 4 == 1);
  const u64 qpow = p.pow(q, p1mod4 ? (p.value() - 1) / 4 : (p.value() + 1) / 4);

  std::string lhs = std::to_string(Sr), rhs;
  bool ok = true;
  if (p.legendre_u(q) == 1) {
    u64 s0 = *p.sqrt_mod(q);
    FpField f(p);
    for (u64 root : {s0, p.value() - s0}) {
      u64 t = p.mul(coef, root);
      u64 Pv = legendre_eval(f, p.value() / 6, t);
      u64 v = p1mod4 ? p.sub(0, p.mul(qpow, Pv))
                     : p.sub(0, p.mul(p.mul(qpow, p.inv(root)), Pv));
      if (rhs.empty()) rhs = std::to_string(v);
      ok = ok && (v == Sr);
    }
    r.witness["field"] = "fp";
  } else {
    u64 d = p.nonresidue();
    QuadExt F(p, d);
    u64 s1 = *p.sqrt_mod(p.mul(q, p.inv(d)));
    for (u64 sg : {s1, p.value() - s1}) {
      QuadExtElem root = F.omega_times(sg);
      QuadExtElem t = F.scale(coef, root);
      QuadExtElem Pv = legendre_eval(F, p.value() / 6, t);
      QuadExtElem v = p1mod4 ? F.neg(F.scale(qpow, Pv))
                             : F.neg(F.scale(qpow, F.mul(F.inverse(root), Pv)));
      if (rhs.empty()) rhs = fp2_str(v);
      ok = ok && F.eq(v, F.embed(Sr));
    }
    r.witness["field"] = "fp2";
    lhs = fp2_str({Sr, 0});
  }
  if (ok)
    set_pass_sides(r, lhs, lhs, std::to_string(p.value()));
  else
    set_fail(r, lhs, rhs, std::to_string(p.value()));
  r.witness["char_sum"] = std::to_string(S);
  return r;
}

// -------------------------------------------------------------------------
// Theorem 2.2: three-way equality mod p
// -------------------------------------------------------------------------

CheckResult check_thm_2_2(const PrimeContext& c, i64 m, i64 n) {
  const Prime& p = c.p;
  auto r = make_check("thm_2_2", p.value());
  r.params["m"] = std::to_string(m);
  r.params["n"] = std::to_string(n);
  if (p.reduce(m) == 0) {
    set_skip(r, "m = 0 mod p");
    return r;
  }
  const u64 mm = p.reduce(m), nn = p.reduce(n);
  const u64 m3 = p.mul(mm, p.mul(mm, mm));
  const u64 t = p.mul(nn, p.inv(p.mul(2, m3)));
  FpField f(p);
  const u64 A = legendre_eval(f, p.value() / 6, t);
  const u64 B = trunc_sum_864(t, p);
  const i64 S = char_sum_cubic(-static_cast<i64>(p.mul(3, p.mul(mm, mm))), static_cast<i64>(nn), p);
  const int sym = p.legendre(3 * m);
  const u64 C = p.reduce(-sym * S);
  r.witness["char_sum"] = std::to_string(S);
  if (A == B && B == C) {
    set_pass_sides(r, std::to_string(A), std::to_string(C), std::to_string(p.value()));
    r.witness["rhs2"] = std::to_string(B);
  } else {
    set_fail(r, std::to_string(A), std::to_string(C), std::to_string(p.value()));
    r.witness["rhs2"] = std::to_string(B);
  }
  return r;
}

// -------------------------------------------------------------------------
// Theorem 2.3: exhaustive t
// -------------------------------------------------------------------------

CheckResult check_thm_2_3(const PrimeContext& c) {
  const Prime& p = c.p;
  const u64 pv = p.value();
  auto r = make_check("thm_2_3", pv);
  std::vector<u64> g(pv);
  for (u64 x = 0; x < pv; ++x) g[x] = p.sub(p.mul(x, p.mul(x, x)), p.mul(3, x));
  const int sym3 = p.legendre(3);
  FpField f(p);
  u64 wl = 0, wr = 0, wt = 0;
  for (u64 t = 0; t < pv; ++t) {
    i64 S = 0;
    const u64 t2 = p.add(t, t);
    for (u64 x = 0; x < pv; ++x) S += p.legendre_u(p.add(g[x], t2));
    const u64 lhs = legendre_eval(f, pv / 6, t);
    const u64 rhs = p.reduce(-sym3 * S);
    if (lhs != rhs) {
      set_fail(r, std::to_string(lhs), std::to_string(rhs), std::to_string(pv));
      r.witness["t"] = std::to_string(t);
      return r;
    }
    wl = lhs, wr = rhs, wt = t;
  }
  set_pass_sides(r, std::to_string(wl), std::to_string(wr), std::to_string(pv));
  r.witness["t"] = std::to_string(wt);
  r.params["t_count"] = std::to_string(pv);
  return r;
}

// -------------------------------------------------------------------------
// Theorems 2.4 / 2.5 with prior identities (1.4)-(1.6) as sub-checks
// -------------------------------------------------------------------------

namespace {

struct SqrtPEval {
  bool fp = true;
  u64 root = 0;  // fp: the square root; fp2: coefficient of w
  u64 d = 0;     // extension parameter when !fp
  QuadExtElem val;
};

// Evaluations of P_idx(a0 + cf*sqrt(s)) for each root choice.
std::vector<SqrtPEval> eval_P_sqrt(const Prime& p, u64 idx, u64 a0, u64 cf, u64 s) {
  std::vector<SqrtPEval> out;
  s %= p.value();
  if (s == 0 || cf % p.value() == 0) {
    FpField f(p);
    out.push_back({true, 0, 0, {legendre_eval(f, idx, a0 % p.value()), 0}});
    return out;
  }
  if (p.legendre_u(s) == 1) {
    FpField f(p);
    u64 s0 = *p.sqrt_mod(s);
    for (u64 root : {s0, p.value() - s0}) {
      u64 t = p.add(a0 % p.value(), p.mul(cf, root));
      out.push_back({true, root, 0, {legendre_eval(f, idx, t), 0}});
    }
  } else {
    u64 d = p.nonresidue();
    QuadExt F(p, d);
    u64 s1 = *p.sqrt_mod(p.mul(s, p.inv(d)));
    for (u64 sg : {s1, p.value() - s1}) {
      QuadExtElem t{a0 % p.value(), p.mul(cf, sg)};
      out.push_back({false, sg, d, legendre_eval(F, idx, t)});
    }
  }
  return out;
}

// P == v (a plain residue)
bool matches_plain(const Prime& p, const SqrtPEval& e, u64 v) {
  return e.val.a == v % p.value() && e.val.b == 0;
}

// P == v * sqrt(s), with sqrt(s) the root recorded in e
bool matches_sqrt(const Prime& p, const SqrtPEval& e, u64 v) {
  if (e.fp) return e.val.a == p.mul(v, e.root) && e.val.b == 0;
  return e.val.a == 0 && e.val.b == p.mul(v, e.root);
}

std::string eval_str(const SqrtPEval& e) { return e.fp ? std::to_string(e.val.a) : fp2_str(e.val); }

}  // namespace

CheckResult check_thm_2_4(const PrimeContext& c) {
  const Prime& p = c.p;
  const u64 pv = p.value();
  auto r = make_check("thm_2_4", pv);
  FpField f(p);
  const bool p1mod4 = pv % 4 == 1;
  u64 skipped = 0;
  for (u64 t = 0; t < pv; ++t) {
    // part (i): t^2 + 3 != 0
    const u64 t2p3 = p.add(p.mul(t, t), 3);
    const u64 lhs_i = legendre_eval(f, (pv - 1) / 2, t);
    // (1.4) sub-check
    {
      i64 S = char_sum_cubic(-static_cast<i64>(p.mul(3, t2p3)),
                             static_cast<i64>(p.mul(p.mul(2, t), p.sub(p.mul(t, t), 9 % pv))), p);
      u64 rhs = p.reduce(-p.legendre(-6) * S);
      if (lhs_i != rhs) {
        set_fail(r, std::to_string(lhs_i), std::to_string(rhs), std::to_string(pv));
        r.witness["part"] = "(1.4)";
        r.witness["t"] = std::to_string(t);
        return r;
      }
    }
    if (t2p3 == 0) {
      ++skipped;
    } else {
      const u64 q = p.sub(0, t2p3);  // -t^2-3
      const u64 qpow = p.pow(q, p1mod4 ? (pv - 1) / 4 : (pv + 1) / 4);
      const u64 num = p.mul(t, p.sub(p.mul(t, t), 9 % pv));  // t(t^2-9)
      const u64 cf = p.mul(num, p.inv(p.mul(t2p3, t2p3)));
      for (const auto& e : eval_P_sqrt(p, pv / 6, 0, cf, t2p3)) {
        bool ok;
        if (p1mod4) {
          // lhs = qpow * P
          ok = e.val.b == 0 && p.mul(qpow, e.val.a) == lhs_i;
        } else if (e.root == 0) {
          // degenerate argument 0: odd-index P vanishes and so must the lhs
          ok = e.val.a == 0 && e.val.b == 0 && lhs_i == 0;
        } else {
          // lhs = -qpow / sqrt(t^2+3) * P
          if (e.fp)
            ok = p.sub(0, p.mul(p.mul(qpow, p.inv(e.root)), e.val.a)) == lhs_i && e.val.b == 0;
          else {
            // P must be a pure w-multiple; -qpow * inv(s1*w) * (b*w) = -qpow*b/s1... handle generically
            QuadExt F(p, e.d);
            QuadExtElem root = F.omega_times(e.root);
            QuadExtElem v = F.neg(F.scale(qpow, F.mul(F.inverse(root), e.val)));
            ok = F.eq(v, F.embed(lhs_i));
          }
        }
        if (!ok) {
          set_fail(r, std::to_string(lhs_i), eval_str(e), std::to_string(pv));
          r.witness["part"] = "i";
          r.witness["t"] = std::to_string(t);
          return r;
        }
      }
    }
    // part (ii): 3t + 5 != 0
    const u64 den = p.add(p.mul(3, t), 5 % pv);
    const u64 lhs_ii = legendre_eval(f, pv / 4, t);
    // (1.5) sub-check
    {
      u64 a1 = p.mul(p.mul(3, den), p.inv(2));  // 3(3t+5)/2
      i64 S = char_sum_cubic(-static_cast<i64>(a1), static_cast<i64>(p.add(p.mul(9, t), 7 % pv)), p);
      u64 rhs = p.reduce(-p.legendre(6) * S);
      if (lhs_ii != rhs) {
        set_fail(r, std::to_string(lhs_ii), std::to_string(rhs), std::to_string(pv));
        r.witness["part"] = "(1.5)";
        r.witness["t"] = std::to_string(t);
        return r;
      }
    }
    if (den == 0) {
      ++skipped;
      continue;
    }
    const u64 q2 = p.add(p.mul(6, t), 10 % pv);
    const u64 qpow2 = p.pow(q2, p1mod4 ? (pv - 1) / 4 : (pv + 1) / 4);
    const u64 cf2 = p.mul(p.add(p.mul(9, t), 7 % pv), p.inv(p.mul(den, den)));
    for (const auto& e : eval_P_sqrt(p, pv / 6, 0, cf2, q2)) {
      bool ok;
      if (p1mod4) {
        ok = e.val.b == 0 && p.mul(qpow2, e.val.a) == lhs_ii;
      } else if (e.root == 0) {
        ok = e.val.a == 0 && e.val.b == 0 && lhs_ii == 0;
      } else if (e.fp) {
        ok = e.val.b == 0 && p.mul(p.mul(qpow2, p.inv(e.root)), e.val.a) == lhs_ii;
      } else {
        QuadExt F(p, e.d);
        QuadExtElem root = F.omega_times(e.root);
        QuadExtElem v = F.scale(qpow2, F.mul(F.inverse(root), e.val));
        ok = F.eq(v, F.embed(lhs_ii));
      }
      if (!ok) {
        set_fail(r, std::to_string(lhs_ii), eval_str(e), std::to_string(pv));
        r.witness["part"] = "ii";
        r.witness["t"] = std::to_string(t);
        return r;
      }
    }
  }
  r.params["t_count"] = std::to_string(pv);
  r.params["t_skipped"] = std::to_string(skipped);
  set_pass_sides(r, "all t", "all t", std::to_string(pv));
  return r;
}

CheckResult check_thm_2_5(const PrimeContext& c) {
  const Prime& p = c.p;
  const u64 pv = p.value();
  auto r = make_check("thm_2_5", pv);
  FpField f(p);
  const bool p1mod4 = pv % 4 == 1;
  u64 skipped = 0;
  for (u64 t = 0; t < pv; ++t) {
    const u64 lhs = legendre_eval(f, pv / 3, t);
    // (1.6) sub-check
    {
      i64 S = char_sum_cubic(static_cast<i64>(p.mul(3, p.sub(p.mul(4, t), 5))),
                             static_cast<i64>(p.mul(2, p.add(p.sub(p.mul(p.mul(2, t), t), p.mul(14, t)), 11 % pv))), p);
      u64 rhs = p.reduce(-jacobi_symbol(static_cast<i64>(pv), 3) * S);
      if (lhs != rhs) {
        set_fail(r, std::to_string(lhs), std::to_string(rhs), std::to_string(pv));
        r.witness["part"] = "(1.6)";
        r.witness["t"] = std::to_string(t);
        return r;
      }
    }
    const u64 q = p.sub(5 % pv, p.mul(4, t));
    if (q == 0) {
      ++skipped;
      continue;
    }
    const u64 qpow = p.pow(q, p1mod4 ? (pv - 1) / 4 : (pv + 1) / 4);
    const u64 num = p.add(p.sub(p.mul(p.mul(2, t), t), p.mul(14, t)), 11 % pv);  // 2t^2-14t+11
    const u64 cf = p.mul(num, p.inv(p.mul(q, q)));
    for (const auto& e : eval_P_sqrt(p, pv / 6, 0, cf, q)) {
      bool ok;
      if (p1mod4) {
        ok = e.val.b == 0 && p.mul(qpow, e.val.a) == lhs;
      } else if (e.root == 0) {
        ok = e.val.a == 0 && e.val.b == 0 && lhs == 0;
      } else if (e.fp) {
        ok = e.val.b == 0 && p.sub(0, p.mul(p.mul(qpow, p.inv(e.root)), e.val.a)) == lhs;
      } else {
        QuadExt F(p, e.d);
        QuadExtElem root = F.omega_times(e.root);
        QuadExtElem v = F.neg(F.scale(qpow, F.mul(F.inverse(root), e.val)));
        ok = F.eq(v, F.embed(lhs));
      }
      if (!ok) {
        set_fail(r, std::to_string(lhs), eval_str(e), std::to_string(pv));
        r.witness["t"] = std::to_string(t);
        return r;
      }
    }
  }
  r.params["t_count"] = std::to_string(pv);
  r.params["t_skipped"] = std::to_string(skipped);
  set_pass_sides(r, "all t", "all t", std::to_string(pv));
  return r;
}

// -------------------------------------------------------------------------
// Theorem 2.6
// -------------------------------------------------------------------------

CheckResult check_thm_2_6(const PrimeContext& c, i64 m, i64 n) {
  const Prime& p = c.p;
  const u64 pv = p.value();
  auto r = make_check("thm_2_6", pv);
  r.params["m"] = std::to_string(m);
  r.params["n"] = std::to_string(n);
  if (p.reduce(m) == 0) {
    set_skip(r, "m = 0 mod p");
    return r;
  }
  const i64 S = char_sum_cubic(m, n, p);
  const u64 Sr = p.reduce(S);
  const u64 mm = p.reduce(m), nn = p.reduce(n);
  const u64 m3_4 = p.mul(4, p.mul(mm, p.mul(mm, mm)));
  const u64 w = p.mul(p.add(m3_4, p.mul(27, p.mul(nn, nn))), p.inv(m3_4));
  // sum_{k<=[p/12]} C([p/12],k) C([5p/12],k) w^k
  const u64 n1 = pv / 12, n2 = 5 * pv / 12;
  u64 acc = 0, c1 = 1, c2 = 1, pw = 1;
  for (u64 k = 0; k <= n1; ++k) {
    acc = p.add(acc, p.mul(p.mul(c1, c2), pw));
    pw = p.mul(pw, w);
    if (k < n1) {
      c1 = p.mul(c1, p.mul((n1 - k) % pv, p.inv((k + 1) % pv)));
      c2 = p.mul(c2, p.mul((n2 - k) % pv, p.inv((k + 1) % pv)));
    }
  }
  const u64 q = p.reduce(-3 * m);
  u64 rhs;
  if (pv % 4 == 1) {
    rhs = p.sub(0, p.mul(p.pow(q, (pv - 1) / 4), acc));
  } else {
    u64 coef = p.mul(p.mul(3, nn), p.inv(p.mul(2, p.mul(mm, mm))));
    rhs = p.sub(0, p.mul(coef, p.mul(p.pow(q, (pv + 1) / 4), acc)));
  }
  r.witness["char_sum"] = std::to_string(S);
  if (rhs == Sr)
    set_pass_sides(r, std::to_string(Sr), std::to_string(rhs), std::to_string(pv));
  else
    set_fail(r, std::to_string(Sr), std::to_string(rhs), std::to_string(pv));
  return r;
}

// -------------------------------------------------------------------------
// Corollaries 2.1 - 2.11
// -------------------------------------------------------------------------

namespace {

// cor 2.1 - 2.7 share the shape: P_{[p/6]}(cf * sqrt(s)) against a branch
// value that is either plain or carries the same sqrt. `expect` returns
// (value v, carries_sqrt) for the active branch, or nullopt for "both sides 0".
struct BranchExpect {
  u64 v = 0;
  bool with_sqrt = false;
  bool zero = false;
};

CheckResult run_sqrt_corollary(const PrimeContext& c, const std::string& id, u64 cf, u64 s,
                               const BranchExpect& exp) {
  const Prime& p = c.p;
  auto r = make_check(id, p.value());
  bool ok = true;
  std::string lhs_s, rhs_s;
  for (const auto& e : eval_P_sqrt(p, p.value() / 6, 0, cf, s)) {
    bool this_ok;
    u64 want = exp.zero ? 0 : exp.v;
    if (exp.zero || !exp.with_sqrt)
      this_ok = matches_plain(p, e, want);
    else
      this_ok = matches_sqrt(p, e, want);
    if (lhs_s.empty()) {
      lhs_s = eval_str(e);
      if (exp.zero || !exp.with_sqrt)
        rhs_s = e.fp ? std::to_string(want % p.value()) : fp2_str({want % p.value(), 0});
      else
        rhs_s = e.fp ? std::to_string(p.mul(want, e.root)) : fp2_str({0, p.mul(want, e.root)});
    }
    ok = ok && this_ok;
  }
  if (ok)
    set_pass_sides(r, lhs_s, lhs_s, std::to_string(p.value()));
  else
    set_fail(r, lhs_s, rhs_s, std::to_string(p.value()));
  return r;
}

// p = x^2 + d y^2 (scale 1) with x odd when parity is mixed-determined
std::optional<std::pair<i64, i64>> rep_signed(u64 pv, u64 d, int scale) {
  auto rr = represent(pv, d, scale);
  if (!rr) return std::nullopt;
  return std::make_pair(static_cast<i64>(rr->first), static_cast<i64>(rr->second));
}

}  // namespace

std::vector<CheckResult> check_corollaries_2x(const PrimeContext& c, const EtaTables* eta) {
  const Prime& p = c.p;
  const u64 pv = p.value();
  std::vector<CheckResult> out;

  // ---- Corollary 2.1: P(21 sqrt33 / 121), p != 11 ----
  {
    auto mk = [&]() -> CheckResult {
      if (pv == 11) {
        auto r = make_check("cor_2_1", pv);
        set_skip(r, "excluded prime");
        return r;
      }
      u64 cf = p.mul(21 % pv, p.inv(121 % pv));
      BranchExpect exp;
      if (pv % 4 == 1) {
        auto rp = rep_signed(pv, 1, 1);
        auto rep = normalize({1, 1, rp->first, rp->second, ""}, "gauss_a");
        u64 v = p.mul(p.reduce(p.legendre(33)), p.mul(p.pow(p.reduce(-33), (pv - 1) / 4), p.reduce(2 * rep.x)));
        exp = {v, false, false};
      } else {
        exp = {0, false, true};
      }
      return run_sqrt_corollary(c, "cor_2_1", cf, 33, exp);
    };
    out.push_back(mk());
  }

  // ---- Corollary 2.2: P(7 sqrt10 / 25), p > 5 ----
  {
    CheckResult r = make_check("cor_2_2", pv);
    if (pv == 5) {
      set_skip(r, "excluded prime");
    } else {
      u64 cf = p.mul(7 % pv, p.inv(25 % pv));
      BranchExpect exp;
      if (pv % 8 == 1) {
        auto rep = normalize({1, 2, rep_signed(pv, 2, 1)->first, rep_signed(pv, 2, 1)->second, ""}, "four_x");
        u64 sgn = ((std::abs(rep.y) / 2) % 2 == 0) ? 1 : pv - 1;  // (-1)^{d/2}
        u64 v = p.mul(sgn, p.mul(p.reduce(p.legendre(5)), p.mul(p.pow(5, (pv - 1) / 4), p.reduce(2 * rep.x))));
        exp = {v, false, false};
      } else if (pv % 8 == 3) {
        auto rep = normalize({1, 2, rep_signed(pv, 2, 1)->first, rep_signed(pv, 2, 1)->second, ""}, "four_y");
        u64 v = p.mul(p.reduce(p.legendre(5)), p.mul(p.pow(5, (pv - 3) / 4), p.reduce(2 * rep.y)));
        exp = {v, true, false};
      } else {
        exp = {0, false, true};
      }
      r = run_sqrt_corollary(c, "cor_2_2", cf, 10, exp);
    }
    out.push_back(r);
  }

  // ---- Corollary 2.3: P(11 sqrt5 / 25), p > 5 ----
  {
    CheckResult r = make_check("cor_2_3", pv);
    if (pv == 5) {
      set_skip(r, "excluded prime");
    } else {
      u64 cf = p.mul(11 % pv, p.inv(25 % pv));
      BranchExpect exp;
      if (pv % 3 == 1) {
        auto rep = normalize({1, 3, rep_signed(pv, 3, 1)->first, rep_signed(pv, 3, 1)->second, ""}, "three_a");
        if (pv % 12 == 1) {
          u64 v = p.mul(p.pow(5, (pv - 1) / 4), p.mul(p.reduce(p.legendre(5)), p.reduce(2 * rep.x)));
          exp = {v, false, false};
        } else {
          u64 v = p.mul(p.sub(0, p.pow(5, (pv - 3) / 4)), p.mul(p.reduce(p.legendre(5)), p.reduce(2 * rep.x)));
          exp = {v, true, false};
        }
      } else {
        exp = {0, false, true};
      }
      r = run_sqrt_corollary(c, "cor_2_3", cf, 5, exp);
    }
    out.push_back(r);
  }

  // ---- Corollary 2.4: P(253 sqrt10 / 800), p > 5 ----
  {
    CheckResult r = make_check("cor_2_4", pv);
    if (pv == 5) {
      set_skip(r, "excluded prime");
    } else {
      u64 cf = p.mul(253 % pv, p.inv(800 % pv));
      BranchExpect exp;
      if (pv % 3 == 1) {
        auto rep = normalize({4, 27, rep_signed(pv, 27, 4)->first, rep_signed(pv, 27, 4)->second, ""}, "three_l");
        if (pv % 12 == 1) {
          u64 v = p.mul(p.sub(0, p.reduce(p.legendre(10))), p.mul(p.pow(10, (pv - 1) / 4), p.reduce(rep.x)));
          exp = {v, false, false};
        } else {
          u64 v = p.mul(p.reduce(p.legendre(10)), p.mul(p.pow(10, (pv - 3) / 4), p.reduce(rep.x)));
          exp = {v, true, false};
        }
      } else {
        exp = {0, false, true};
      }
      r = run_sqrt_corollary(c, "cor_2_4", cf, 10, exp);
    }
    out.push_back(r);
  }

  // ---- Corollary 2.5: P(3 sqrt105 / 25), p > 7 ----
  {
    CheckResult r = make_check("cor_2_5", pv);
    if (pv == 5 || pv == 7) {
      set_skip(r, "excluded prime");
    } else {
      u64 cf = p.mul(3 % pv, p.inv(25 % pv));
      BranchExpect exp;
      u64 pm7 = pv % 7;
      if (pm7 == 1 || pm7 == 2 || pm7 == 4) {
        auto rp = rep_signed(pv, 7, 1);
        i64 C = rp->first, Dv = rp->second;
        if (pv % 4 == 1) {
          if (C % 2 == 0) std::swap(C, Dv);
          auto rep = normalize({1, 7, C, Dv, ""}, "four_x");
          u64 v = p.mul(2 % pv, p.mul(p.reduce(jacobi_symbol(static_cast<i64>(pv), 15)),
                                      p.mul(p.pow(15, (pv - 1) / 4), p.reduce(rep.x))));
          exp = {v, false, false};
        } else {
          if (Dv % 2 == 0) std::swap(C, Dv);
          auto rep = normalize({1, 7, C, Dv, ""}, "four_y");
          u64 v = p.mul(2 % pv, p.mul(p.reduce(jacobi_symbol(static_cast<i64>(pv), 15)),
                                      p.mul(p.pow(15, (pv - 3) / 4), p.reduce(rep.y))));
          exp = {v, true, false};
        }
      } else {
        exp = {0, false, true};
      }
      r = run_sqrt_corollary(c, "cor_2_5", cf, 105, exp);
    }
    out.push_back(r);
  }

  // ---- Corollary 2.6: P(171 sqrt1785 / 85^2), p not in {5,7,17}.
  // The symbol must be (1785/p): it differs from (255/p) by (7/p), which is
  // -1 exactly when p = 3 mod 4 in the split residue classes. ----
  {
    CheckResult r = make_check("cor_2_6", pv);
    if (pv == 5 || pv == 7 || pv == 17) {
      set_skip(r, "excluded prime");
    } else {
      u64 cf = p.mul(171 % pv, p.inv((85 * 85) % pv));
      BranchExpect exp;
      u64 pm7 = pv % 7;
      if (pm7 == 1 || pm7 == 2 || pm7 == 4) {
        auto rp = rep_signed(pv, 7, 1);
        i64 C = rp->first, Dv = rp->second;
        if (pv % 4 == 1) {
          if (C % 2 == 0) std::swap(C, Dv);
          auto rep = normalize({1, 7, C, Dv, ""}, "four_x");
          u64 v = p.mul(p.reduce(p.legendre(1785)), p.mul(p.pow(255 % pv, (pv - 1) / 4), p.reduce(2 * rep.x)));
          exp = {v, false, false};
        } else {
          if (Dv % 2 == 0) std::swap(C, Dv);
          auto rep = normalize({1, 7, C, Dv, ""}, "four_y");
          u64 v = p.mul(p.reduce(p.legendre(1785)), p.mul(p.pow(255 % pv, (pv - 3) / 4), p.reduce(2 * rep.y)));
          exp = {v, true, false};
        }
      } else {
        exp = {0, false, true};
      }
      r = run_sqrt_corollary(c, "cor_2_6", cf, 1785, exp);
    }
    out.push_back(r);
  }

  // ---- Corollary 2.7: P(7 sqrt22 / 32), p != 11.
  // The inert branch is exact. In the split branch (u/11)u does not determine
  // the sign (u -> -u leaves it fixed while the true sign varies with the
  // cubic class of p), so the branch value is checked up to sign, and the
  // exact value is pinned separately against the driving curve
  // x^3 - 96*11 x + 112*11^2 through the bridge identity. ----
  {
    CheckResult r = make_check("cor_2_7", pv);
    if (pv == 11) {
      set_skip(r, "excluded prime");
    } else {
      u64 cf = p.mul(7 % pv, p.inv(32 % pv));
      if (jacobi_symbol(static_cast<i64>(pv), 11) == -1) {
        r = run_sqrt_corollary(c, "cor_2_7", cf, 22, {0, false, true});
      } else {
        const i64 S = char_sum_cubic(-1056, 13552, p);
        const u64 Sr = p.reduce(S);
        const u64 q = p.reduce(-3 * -1056);  // 3168 = 144 * 22
        const u64 qpow = p.pow(q, pv % 4 == 1 ? (pv - 1) / 4 : (pv + 1) / 4);
        r.params["char_sum"] = std::to_string(S);
        // branch-table magnitude
        auto reps = represent_all(pv, 11, 4);
        u64 branch_val = 0;
        bool branch_sqrt = pv % 4 == 3;
        if (!reps.empty()) {
          i64 u = static_cast<i64>(reps.front().first), v = static_cast<i64>(reps.front().second);
          try {
            if (pv % 4 == 1) {
              auto rep = (u % 2 == 1) ? normalize({4, 11, u, v, ""}, "four_x")
                                      : normalize({4, 11, u, v, ""}, "eight_x");
              u64 base = (u % 2 == 1) ? p.pow(p.reduce(-2), (pv - 1) / 4) : p.pow(2, (pv - 1) / 4);
              int sg = (u % 2 == 1) ? -1 : 1;
              branch_val = p.mul(p.reduce(sg * jacobi_symbol(static_cast<i64>(pv), 3)),
                              p.mul(base, p.reduce(rep.x)));
            } else {
              auto rep = (v % 2 == 1) ? normalize({4, 11, u, v, ""}, "four_y")
                                      : normalize({4, 11, u, v, ""}, "eight_y");
              u64 base = (v % 2 == 1) ? p.pow(p.reduce(-2), (pv - 3) / 4) : p.pow(2, (pv - 3) / 4);
              int sg = (v % 2 == 1) ? -1 : 1;
              branch_val = p.mul(p.reduce(sg * jacobi_symbol(static_cast<i64>(pv), 3)),
                              p.mul(base, p.reduce(rep.y)));
            }
          } catch (const std::domain_error& ex) {
            set_fail(r, "normalization", ex.what(), std::to_string(pv));
            out.push_back(r);
            goto cor27_done;
          }
        }
        bool ok = !reps.empty();
        std::string lhs_s, rhs_s;
        for (const auto& e : eval_P_sqrt(p, pv / 6, 0, cf, 22)) {
          // exact: S = -qpow * P (p=1 mod 4) or S = -qpow/(12*root22) * P
          bool exact_ok;
          u64 root22sc = p.mul(12 % pv, e.root);  // sqrt(3168) = 12 sqrt(22)
          if (e.fp) {
            u64 v = (pv % 4 == 1) ? p.sub(0, p.mul(qpow, e.val.a))
                                  : p.sub(0, p.mul(p.mul(qpow, p.inv(root22sc)), e.val.a));
            exact_ok = (v == Sr) && e.val.b == 0;
          } else {
            QuadExt F(p, e.d);
            QuadExtElem root = F.omega_times(root22sc);
            QuadExtElem v = (pv % 4 == 1)
                                ? F.neg(F.scale(qpow, e.val))
                                : F.neg(F.scale(qpow, F.mul(F.inverse(root), e.val)));
            exact_ok = F.eq(v, F.embed(Sr));
          }
          // branch value up to sign
          bool mag_ok;
          if (!branch_sqrt) {
            mag_ok = e.val.b == 0 && (e.val.a == branch_val || e.val.a == p.sub(0, branch_val));
          } else {
            u64 want = e.fp ? p.mul(branch_val, e.root) : branch_val;
            if (e.fp)
              mag_ok = e.val.b == 0 && (e.val.a == want || e.val.a == p.sub(0, want));
            else {
              u64 w2 = p.mul(branch_val, e.root);
              mag_ok = e.val.a == 0 && (e.val.b == w2 || e.val.b == p.sub(0, w2));
            }
          }
          if (lhs_s.empty()) {
            lhs_s = eval_str(e);
            rhs_s = lhs_s;
          }
          if (!exact_ok || !mag_ok) {
            rhs_s = "exact_ok=" + std::to_string(exact_ok) + " branch_mag_ok=" + std::to_string(mag_ok);
            ok = false;
          }
        }
        if (ok)
          set_pass_sides(r, lhs_s, lhs_s, std::to_string(pv));
        else
          set_fail(r, lhs_s, rhs_s, std::to_string(pv));
      }
    }
    out.push_back(r);
  cor27_done:;
  }

  // ---- Corollary 2.8: c(1,1,11,11;p) = P(19/8) = (-1)^{(p-1)/2} sum D_k/256^k ----
  {
    CheckResult r = make_check("cor_2_8", pv);
    if (eta == nullptr || eta->degree < pv) {
      set_skip(r, "eta series not built to degree p");
    } else {
      i64 cp = eta->coeff({1, 1, 11, 11}, pv);
      u64 lhs = p.reduce(cp);
      FpField f(p);
      u64 mid = legendre_eval(f, pv / 6, p.mul(19 % pv, p.inv(8)));
      u64 s = trunc_sum_D_z(p.inv(256 % pv), p);
      u64 rhs = (pv % 4 == 1) ? s : p.sub(0, s);
      r.witness["eta_coeff"] = std::to_string(cp);
      r.witness["rhs2"] = std::to_string(mid);
      if (lhs == mid && mid == rhs)
        set_pass_sides(r, std::to_string(lhs), std::to_string(rhs), std::to_string(pv));
      else
        set_fail(r, std::to_string(lhs), std::to_string(rhs), std::to_string(pv));
    }
    out.push_back(r);
  }

  // ---- Corollary 2.9 (the two identities that hold; the [p/6]-link of the
  // first chain has no rational-argument form):
  //   P_{(p-1)/2}(m^2-3)   = sum C(2k,k)^2 ((4-m^2)/32)^k
  //   P_{[p/4]}((2m^2-5)/3) = (2m/p) P_{[p/6]}((3m^2-4)/m^3)
  //                         = sum C(4k,2k)C(2k,k)((4-m^2)/192)^k
  //                         = (2m/p) sum D_k ((m+1)(m-2)^2/(864 m^3))^k
  // swept over all m in [1, p-1] ----
  {
    CheckResult r = make_check("cor_2_9", pv);
    FpField f(p);
    const u64 i32v = p.inv(32 % pv), i192 = p.inv(192 % pv), i864 = p.inv(864 % pv);
    bool ok = true;
    for (u64 m = 1; m < pv && ok; ++m) {
      const u64 m2 = p.mul(m, m);
      // chain a (true part)
      u64 lhs_a = legendre_eval(f, (pv - 1) / 2, p.sub(m2, 3));
      u64 z = p.mul(p.sub(4, m2), i32v);
      u64 acc = 0, pw = 1;
      for (u64 k = 0; k <= (pv - 1) / 2; ++k) {
        u64 cb = c.central2[k] % pv;
        acc = p.add(acc, p.mul(p.mul(cb, cb), pw));
        pw = p.mul(pw, z);
      }
      if (lhs_a != acc) {
        set_fail(r, std::to_string(lhs_a), std::to_string(acc), std::to_string(pv));
        r.witness["part"] = "a";
        r.witness["m"] = std::to_string(m);
        ok = false;
        break;
      }
      // chain b
      u64 lhs_b = legendre_eval(f, pv / 4, p.mul(p.sub(p.mul(2, m2), 5 % pv), p.inv(3)));
      u64 sym = p.reduce(p.legendre(2 * static_cast<i64>(m)));
      u64 m3 = p.mul(m2, m);
      u64 e2 = p.mul(sym, legendre_eval(f, pv / 6, p.mul(p.sub(p.mul(3, m2), 4), p.inv(m3))));
      u64 z2 = p.mul(p.sub(4, m2), i192);
      u64 acc2 = 0, pw2 = 1;
      for (u64 k = 0; k <= pv / 4; ++k) {
        acc2 = p.add(acc2, p.mul(p.mul(c.fact.binom_p(4 * k, 2 * k), c.central2[k] % pv), pw2));
        pw2 = p.mul(pw2, z2);
      }
      u64 z3 = p.mul(p.mul(p.add(m, 1), p.mul(p.sub(m, 2), p.sub(m, 2))), p.mul(i864, p.inv(m3)));
      u64 e4 = p.mul(sym, trunc_sum_D_z(z3, p));
      if (!(lhs_b == e2 && lhs_b == acc2 && lhs_b == e4)) {
        set_fail(r, std::to_string(lhs_b), std::to_string(e2), std::to_string(pv));
        r.witness["part"] = "b";
        r.witness["m"] = std::to_string(m);
        r.witness["sum192"] = std::to_string(acc2);
        r.witness["sumD"] = std::to_string(e4);
        ok = false;
      }
    }
    if (ok) {
      r.params["m_count"] = std::to_string(pv - 1);
      set_pass_sides(r, "all m", "all m", std::to_string(pv));
    }
    out.push_back(r);
  }

  // ---- Corollary 2.10 (with (-m/p), forced by the p = 3 mod 4 case):
  //   P_{[p/3]}((5-m^2)/4) = (-m/p) P_{[p/6]}((m^4+18m^2-27)/(8m^3))
  //                        = sum C(2k,k)C(3k,k)((m^2-1)/216)^k
  //                        = (-m/p) sum D_k ((m+1)(3-m)^3/(6912 m^3))^k ----
  {
    CheckResult r = make_check("cor_2_10", pv);
    FpField f(p);
    const u64 i216 = p.inv(216 % pv), i6912 = p.inv(6912 % pv);
    bool ok = true;
    for (u64 m = 1; m < pv && ok; ++m) {
      const u64 m2 = p.mul(m, m), m3 = p.mul(m2, m);
      u64 lhs = legendre_eval(f, pv / 3, p.mul(p.sub(5 % pv, m2), p.inv(4)));
      u64 sym = p.reduce(p.legendre(-static_cast<i64>(m)));
      u64 arg = p.mul(p.sub(p.add(p.mul(m2, m2), p.mul(18, m2)), 27 % pv), p.inv(p.mul(8, m3)));
      u64 e2 = p.mul(sym, legendre_eval(f, pv / 6, arg));
      u64 z = p.mul(p.sub(m2, 1), i216);
      u64 acc = 0, pw = 1;
      for (u64 k = 0; k <= pv / 3; ++k) {
        acc = p.add(acc, p.mul(p.mul(c.central2[k] % pv, c.fact.binom_p(3 * k, k)), pw));
        pw = p.mul(pw, z);
      }
      u64 c3 = p.mul(p.sub(3, m), p.mul(p.sub(3, m), p.sub(3, m)));
      u64 z2 = p.mul(p.mul(p.add(m, 1), c3), p.mul(i6912, p.inv(m3)));
      u64 e4 = p.mul(sym, trunc_sum_D_z(z2, p));
      if (!(lhs == e2 && lhs == acc && lhs == e4)) {
        set_fail(r, std::to_string(lhs), std::to_string(e2), std::to_string(pv));
        r.witness["m"] = std::to_string(m);
        r.witness["sum216"] = std::to_string(acc);
        r.witness["sumD"] = std::to_string(e4);
        ok = false;
      }
    }
    if (ok) {
      r.params["m_count"] = std::to_string(pv - 1);
      set_pass_sides(r, "all m", "all m", std::to_string(pv));
    }
    out.push_back(r);
  }

  // ---- Corollary 2.11 (prefactor corrected to (3 +- 2 sqrt3)^{(p-1)/4}):
  //   P_{[p/3]}((7 +- 3 sqrt3)/2) = 2a (3 +- 2 sqrt3)^{(p-1)/4}  (p = 1 mod 4)
  //                               = 0                            (p = 3 mod 4) ----
  {
    CheckResult r = make_check("cor_2_11", pv);
    i64 a = 0;
    if (pv % 4 == 1) {
      auto rep = normalize({1, 1, rep_signed(pv, 1, 1)->first, rep_signed(pv, 1, 1)->second, ""}, "gauss_a");
      a = rep.x;
    }
    bool ok = true;
    std::string lhs_s, rhs_s;
    auto record = [&](const std::string& l, const std::string& rr, bool good) {
      if (lhs_s.empty()) {
        lhs_s = l;
        rhs_s = rr;
      }
      ok = ok && good;
    };
    const u64 half = p.inv(2);
    if (p.legendre(3) == 1) {
      FpField f(p);
      u64 s0 = *p.sqrt_mod(3);
      for (u64 root : {s0, pv - s0}) {
        u64 t = p.mul(p.add(7 % pv, p.mul(3, root)), half);
        u64 lhs = legendre_eval(f, pv / 3, t);
        u64 rhs = 0;
        if (pv % 4 == 1)
          rhs = p.mul(p.reduce(2 * a), p.pow(p.add(3, p.mul(2, root)), (pv - 1) / 4));
        record(std::to_string(lhs), std::to_string(rhs), lhs == rhs);
      }
    } else {
      u64 d = p.nonresidue();
      QuadExt F(p, d);
      u64 s1 = *p.sqrt_mod(p.mul(3, p.inv(d)));
      for (u64 sg : {s1, pv - s1}) {
        QuadExtElem t = F.scale(half, {7 % pv, p.mul(3, sg)});
        QuadExtElem lhs = legendre_eval(F, pv / 3, t);
        QuadExtElem rhs = F.zero();
        if (pv % 4 == 1)
          rhs = F.scale(p.reduce(2 * a), F.pow({3, p.mul(2, sg)}, (pv - 1) / 4));
        record(fp2_str(lhs), fp2_str(rhs), F.eq(lhs, rhs));
      }
    }
    if (ok)
      set_pass_sides(r, lhs_s, lhs_s, std::to_string(pv));
    else
      set_fail(r, lhs_s, rhs_s, std::to_string(pv));
    out.push_back(r);
  }

  return out;
}

// -------------------------------------------------------------------------
// Theorem 3.1: coefficientwise identity mod p^2
// -------------------------------------------------------------------------

CheckResult check_thm_3_1(const PrimeContext& c) {
  const Prime& p = c.p;
  const u64 pv = p.value(), p2 = p.p2();
  auto r = make_check("thm_3_1", pv);
  const u64 deg = 2 * (pv - 1);
  std::vector<u64> lhs(deg + 1, 0), rhs(deg + 1, 0);
  // lhs: sum_k T_k x^k (1-432x)^k expanded via C(k,r)(-432)^r
  std::vector<u64> pow432(pv), row(pv, 0);
  pow432[0] = 1;
  const u64 m432 = p.reduce2(-432);
  for (u64 r2 = 1; r2 < pv; ++r2) pow432[r2] = mulmod(pow432[r2 - 1], m432, p2);
  row[0] = 1;
  for (u64 k = 0; k < pv; ++k) {
    if (k > 0)
      for (u64 j = k; j >= 1; --j) row[j] = addmod(row[j], row[j - 1], p2);  // Pascal: C(k,j)
    if (c.T2[k] != 0)
      for (u64 j = 0; j <= k; ++j)
        lhs[k + j] = addmod(lhs[k + j], mulmod(c.T2[k], mulmod(row[j], pow432[j], p2), p2), p2);
  }
  for (u64 i = 0; i < pv; ++i) {
    if (c.D2[i] == 0) continue;
    for (u64 j = 0; j < pv; ++j)
      rhs[i + j] = addmod(rhs[i + j], mulmod(c.D2[i], c.D2[j], p2), p2);
  }
  for (u64 i = 0; i <= deg; ++i) {
    if (lhs[i] != rhs[i]) {
      set_fail(r, std::to_string(lhs[i]), std::to_string(rhs[i]), std::to_string(p2));
      r.witness["coefficient"] = std::to_string(i);
      return r;
    }
  }
  r.params["coeff_count"] = std::to_string(deg + 1);
  set_pass_sides(r, "all coefficients", "all coefficients", std::to_string(p2));
  return r;
}

// -------------------------------------------------------------------------
// Theorem 3.2, Eq. (3.3), Lemma 3.3
// -------------------------------------------------------------------------

namespace {

// p = a^2 + b^2 with 4 | a-1 and 3 | a-b; requires p = 1 mod 4
FormRep gauss_rep(const Prime& p) {
  auto rr = represent(p.value(), 1, 1);
  FormRep rep{1, 1, static_cast<i64>(rr->first), static_cast<i64>(rr->second), ""};
  rep = normalize(rep, "gauss_a");
  return rep;
}

}  // namespace

CheckResult check_thm_3_2(const PrimeContext& c) {
  const Prime& p = c.p;
  const u64 pv = p.value(), p2 = p.p2();
  auto r = make_check("thm_3_2", pv);
  const u64 lhs = sum_D_p2(c, p.inv2(864 % p2));
  u64 rhs = 0;
  if (pv % 4 == 3) {
    rhs = 0;  // p = 3 mod 4: the full sum vanishes mod p^2
    r.params["branch"] = "p=3mod4";
  } else {
    auto rep = gauss_rep(p);
    if (pv % 12 == 1) {
      i64 a = rep.x;
      u64 a2 = p.reduce2(2 * a);
      u64 corr = mulmod(pv, p.inv(p.reduce(2 * a)), p2);
      if (a % 3 != 0) {
        rhs = submod(a2, corr, p2);
        r.params["branch"] = "1mod12,3!|a";
      } else {
        rhs = addmod(p.sub2(0, a2), corr, p2);
        r.params["branch"] = "1mod12,3|a";
      }
      r.params["a"] = std::to_string(a);
    } else {
      rep = normalize(rep, "three_xy");
      i64 b = rep.y;
      u64 b2 = p.reduce2(2 * b);
      u64 corr = mulmod(pv, p.inv(p.reduce(2 * b)), p2);
      rhs = submod(b2, corr, p2);
      r.params["branch"] = "5mod12";
      r.params["a"] = std::to_string(rep.x);
      r.params["b"] = std::to_string(b);
    }
  }
  if (lhs == rhs)
    set_pass_sides(r, std::to_string(lhs), std::to_string(rhs), std::to_string(p2));
  else
    set_fail(r, std::to_string(lhs), std::to_string(rhs), std::to_string(p2));
  return r;
}

CheckResult check_eq_3_3(const PrimeContext& c) {
  const Prime& p = c.p;
  const u64 pv = p.value(), p2 = p.p2();
  auto r = make_check("eq_3_3", pv);
  const u64 lhs = sum_T_p2(c, p.inv2(1728 % p2));
  u64 rhs = 0;
  if (pv % 4 == 1) {
    auto rr = represent(pv, 1, 1);
    u64 a = rr->first % 2 == 1 ? rr->first : rr->second;  // odd member
    int sym = jacobi_symbol(static_cast<i64>(pv), 3);
    u64 val = submod(mulmod(4, mulmod(a, a, p2), p2), (2 * pv) % p2, p2);
    rhs = sym == 1 ? val : p.sub2(0, val);
    r.params["a"] = std::to_string(a);
  }
  if (lhs == rhs)
    set_pass_sides(r, std::to_string(lhs), std::to_string(rhs), std::to_string(p2));
  else
    set_fail(r, std::to_string(lhs), std::to_string(rhs), std::to_string(p2));
  return r;
}

CheckResult check_lemma_3_3(const PrimeContext& c) {
  const Prime& p = c.p;
  const u64 pv = p.value();
  auto r = make_check("lemma_3_3", pv);
  if (pv % 4 != 1) {
    set_skip(r, "statement requires p = 1 mod 4");
    return r;
  }
  FpField f(p);
  const u64 P0 = legendre_eval(f, pv / 6, 0);
  const u64 bn = c.fact.binom_p((pv - 1) / 2, pv / 12);
  auto rep = gauss_rep(p);
  u64 rhs;
  if (pv % 12 == 1) {
    rhs = (rep.x % 3 != 0) ? p.reduce(2 * rep.x) : p.reduce(-2 * rep.x);
  } else {
    rep = normalize(rep, "three_xy");
    rhs = p.reduce(2 * rep.y);
  }
  r.params["a"] = std::to_string(rep.x);
  r.witness["binom"] = std::to_string(bn);
  if (P0 == bn && bn == rhs)
    set_pass_sides(r, std::to_string(P0), std::to_string(rhs), std::to_string(pv));
  else
    set_fail(r, std::to_string(P0), std::to_string(rhs), std::to_string(pv));
  return r;
}

// -------------------------------------------------------------------------
// Theorem 4.1, Theorem 4.2, Corollary 3.1
// -------------------------------------------------------------------------

CheckResult check_thm_4_1(const PrimeContext& c, i64 m) {
  const Prime& p = c.p;
  const u64 pv = p.value();
  auto r = make_check("thm_4_1", pv);
  r.params["m"] = std::to_string(m);
  const u64 mm = p.reduce(m);
  if (mm == 0) {
    set_skip(r, "m = 0 mod p");
    return r;
  }
  const u64 x = p.sub(1, p.mul(1728 % pv, p.inv(mm)));
  if (p.legendre_u(x) == -1) {
    set_skip(r, "1 - 1728/m is a non-residue");
    return r;
  }
  const u64 sum_p = sum_T_p(c, p.inv(mm));
  FpField f(p);
  u64 t0 = *p.sqrt_mod(x);
  bool ok = true;
  std::string lhs_s, rhs_s;
  for (u64 t : {t0, t0 == 0 ? 0 : pv - t0}) {
    u64 Pv = legendre_eval(f, pv / 6, t);
    u64 P2v = p.mul(Pv, Pv);
    i64 S = char_sum_cubic(-3, static_cast<i64>(p.add(t, t)), p);
    u64 S2 = p.mul(p.reduce(S), p.reduce(S));
    if (lhs_s.empty()) {
      lhs_s = std::to_string(sum_p);
      rhs_s = std::to_string(P2v);
      r.witness["char_sum_sq"] = std::to_string(S2);
    }
    ok = ok && sum_p == P2v && P2v == S2;
    if (Pv == 0 && t != 0) {
      u64 s2 = sum_T_p2(c, p.inv2(mm));
      r.witness["vanishing_mod_p2"] = std::to_string(s2);
      ok = ok && s2 == 0;
    }
    if (t == 0) {
      r.witness["degenerate"] = "t = 0: no p-adic lift, mod p^2 clause not applicable";
      break;
    }
  }
  if (ok)
    set_pass_sides(r, lhs_s, lhs_s, std::to_string(pv));
  else
    set_fail(r, lhs_s, rhs_s, std::to_string(pv));
  return r;
}

CheckResult check_thm_4_2(const PrimeContext& c, i64 m, i64 n) {
  const Prime& p = c.p;
  const u64 pv = p.value(), p2 = p.p2();
  auto r = make_check("thm_4_2", pv);
  r.params["m"] = std::to_string(m);
  r.params["n"] = std::to_string(n);
  const u64 mm = p.reduce(m), nn = p.reduce(n);
  if (mm == 0) {
    set_skip(r, "m = 0 mod p");
    return r;
  }
  const i64 S = char_sum_cubic(m, n, p);
  const u64 S2 = p.mul(p.reduce(S), p.reduce(S));
  const u64 m3_4 = p.mul(4, p.mul(mm, p.mul(mm, mm)));
  const u64 w = p.mul(p.add(m3_4, p.mul(27, p.mul(nn, nn))), p.inv(p.mul(1728 % pv, m3_4)));
  const int sym = p.legendre(-3 * m);
  const u64 full = p.reduce(sym * static_cast<i64>(sum_T_p(c, w)));
  const u64 trunc = p.reduce(sym * static_cast<i64>(trunc_sum_T_p(c, w)));
  r.witness["char_sum"] = std::to_string(S);
  bool ok = (S2 == full && full == trunc);
  if (S == 0) {
    const u64 m3_4q = mulmod(4, mulmod(mm, mulmod(mm, mm, p2), p2), p2);
    const u64 w2 = mulmod(addmod(m3_4q, mulmod(27, mulmod(nn, nn, p2), p2), p2),
                          p.inv2(mulmod(1728 % p2, m3_4q, p2)), p2);
    const u64 s2 = sum_T_p2(c, w2);
    r.witness["vanishing_mod_p2"] = std::to_string(s2);
    ok = ok && s2 == 0;
  }
  if (ok)
    set_pass_sides(r, std::to_string(S2), std::to_string(full), std::to_string(pv));
  else
    set_fail(r, std::to_string(S2), std::to_string(full), std::to_string(pv));
  return r;
}

CheckResult check_cor_3_1(const PrimeContext& c, i64 m) {
  const Prime& p = c.p;
  const u64 pv = p.value(), p2 = p.p2();
  auto r = make_check("cor_3_1", pv);
  r.params["m"] = std::to_string(m);
  const u64 mm = p.reduce(m);
  if (mm == 0) {
    set_skip(r, "m = 0 mod p");
    return r;
  }
  const u64 m2q = p.reduce2(m);
  const u64 X2 = submod(1, mulmod(1728 % p2, p.inv2(m2q), p2), p2);
  if (X2 % pv == 0) {
    set_skip(r, "1 - 1728/m = 0 mod p: no unit square root");
    return r;
  }
  if (p.legendre_u(X2 % pv) == -1) {
    set_skip(r, "1 - 1728/m is a non-residue");
    return r;
  }
  const u64 lhs = sum_T_p2(c, p.inv2(m2q));
  // Hensel lift of the mod-p root to mod p^2: t' = (t + X2/t)/2
  u64 t = *p.sqrt_mod(X2 % pv);
  u64 tq = mulmod(addmod(t, mulmod(X2, inv_mod(t, p2), p2), p2), p.inv2(2), p2);
  bool ok = true;
  std::string rhs_s;
  for (u64 root : {tq, p2 - tq}) {
    u64 xs = mulmod(submod(1, root, p2), p.inv2(864 % p2), p2);
    u64 s = sum_D_p2(c, xs);
    u64 sq = mulmod(s, s, p2);
    if (rhs_s.empty()) rhs_s = std::to_string(sq);
    ok = ok && sq == lhs;
  }
  if (ok)
    set_pass_sides(r, std::to_string(lhs), rhs_s, std::to_string(p2));
  else
    set_fail(r, std::to_string(lhs), rhs_s, std::to_string(p2));
  return r;
}

// -------------------------------------------------------------------------
// CM supercongruences, Theorems 4.3 - 4.13
// -------------------------------------------------------------------------

namespace {

enum class SymKind { p_on_top, value_over_p };
enum class CrossForm { none, gauss_2_2, proof_2_2, eq_2_3, eq_2_4, eq_2_5, abs_u, signed_u };

struct CMCase {
  const char* id;
  i64 m_sum;
  SymKind sym_kind;
  i64 sym_val;  // (p/sym_val) or (sym_val/p)
  int scale;
  u64 d;
  SymKind twist_kind;
  i64 twist_val;
  int coef;           // multiplier of x^2
  bool odd_x;         // pick the odd member (4.10)
  std::initializer_list<u64> excluded;
  i64 curve_m, curve_n;
  CrossForm cross;
};

constexpr CMCase kCMCases[] = {
    {"thm_4_3", -32768, SymKind::p_on_top, 11, 4, 11, SymKind::value_over_p, -2, 1, false, {11}, -1056, 13552, CrossForm::abs_u},
    {"thm_4_4", -884736, SymKind::p_on_top, 19, 4, 19, SymKind::value_over_p, -6, 1, false, {19}, -152, 722, CrossForm::signed_u},
    {"thm_4_5", -884736000, SymKind::p_on_top, 43, 4, 43, SymKind::p_on_top, 15, 1, false, {5, 43}, -3440, 77658, CrossForm::signed_u},
    {"thm_4_6", -147197952000, SymKind::p_on_top, 67, 4, 67, SymKind::value_over_p, -330, 1, false, {5, 11, 67}, -29480, 1948226, CrossForm::signed_u},
    {"thm_4_7", -262537412640768000, SymKind::p_on_top, 163, 4, 163, SymKind::value_over_p, -10005, 1, false, {5, 23, 29, 163}, -8697680, 9873093538, CrossForm::signed_u},
    {"thm_4_8", -3375, SymKind::p_on_top, 7, 1, 7, SymKind::p_on_top, 15, 4, false, {5, 7}, -35, 98, CrossForm::eq_2_5},
    {"thm_4_9", 16581375, SymKind::p_on_top, 7, 1, 7, SymKind::p_on_top, 255, 4, false, {5, 7, 17}, -595, 5586, CrossForm::eq_2_5},
    {"thm_4_10", 287496, SymKind::value_over_p, -4, 1, 1, SymKind::p_on_top, 33, 4, true, {11}, -11, 14, CrossForm::gauss_2_2},
    {"thm_4_11", 8000, SymKind::value_over_p, -8, 1, 2, SymKind::value_over_p, -5, 4, false, {5}, -30, 56, CrossForm::proof_2_2},
    {"thm_4_12", 54000, SymKind::value_over_p, -3, 1, 3, SymKind::p_on_top, 5, 4, false, {5}, -15, 22, CrossForm::eq_2_3},
    {"thm_4_13", -12288000, SymKind::value_over_p, -3, 4, 27, SymKind::value_over_p, 10, 1, false, {5}, -120, 506, CrossForm::eq_2_4},
};

int eval_sym(const Prime& p, SymKind kind, i64 v) {
  if (kind == SymKind::p_on_top) return jacobi_symbol(static_cast<i64>(p.value()), static_cast<u64>(v));
  return p.legendre(v);
}

// closed-form cross-check of the driving character sum; returns false on mismatch
bool cross_check_charsum(const Prime& p, const CMCase& cm, int sym, std::string* note) {
  if (cm.cross == CrossForm::none) return true;
  const u64 pv = p.value();
  if (p.reduce(cm.curve_m) == 0 || p.reduce(cm.curve_n) == 0) return true;  // degenerate reduction
  const i64 S = char_sum_cubic(cm.curve_m, cm.curve_n, p);
  auto expect_zero = [&]() { return S == 0; };
  switch (cm.cross) {
    case CrossForm::gauss_2_2: {
      if (pv % 4 != 1) return expect_zero();
      auto rr = represent(pv, 1, 1);
      FormRep rep = normalize({1, 1, static_cast<i64>(rr->first), static_cast<i64>(rr->second), ""}, "gauss_a");
      i64 want = ((pv + 3) / 4 % 2 == 0 ? 1 : -1) * 2 * rep.x;
      *note = "S=" + std::to_string(S) + " expect=" + std::to_string(want);
      return S == want;
    }
    case CrossForm::proof_2_2: {
      // sum chi(x^3 - 30x + 56): (-1)^{(p+7)/8}(3/p)2c (p=1 mod 8),
      // (-1)^{(p-3)/8}(3/p)2c (p=3 mod 8), 0 otherwise; p = c^2+2d^2, 4|c-1
      u64 m8 = pv % 8;
      if (m8 != 1 && m8 != 3) return expect_zero();
      auto rr = represent(pv, 2, 1);
      FormRep rep = normalize({1, 2, static_cast<i64>(rr->first), static_cast<i64>(rr->second), ""}, "four_x");
      i64 sgn = (m8 == 1) ? (((pv + 7) / 8) % 2 == 0 ? 1 : -1) : (((pv - 3) / 8) % 2 == 0 ? 1 : -1);
      i64 want = sgn * p.legendre(3) * 2 * rep.x;
      *note = "S=" + std::to_string(S) + " expect=" + std::to_string(want);
      return S == want;
    }
    case CrossForm::eq_2_3: {
      if (pv % 3 != 1) return expect_zero();
      auto rr = represent(pv, 3, 1);
      FormRep rep = normalize({1, 3, static_cast<i64>(rr->first), static_cast<i64>(rr->second), ""}, "three_a");
      i64 want = -2 * rep.x;
      *note = "S=" + std::to_string(S) + " expect=" + std::to_string(want);
      return S == want;
    }
    case CrossForm::eq_2_4: {
      if (pv % 3 != 1) return expect_zero();
      auto rr = represent(pv, 27, 4);
      FormRep rep = normalize({4, 27, static_cast<i64>(rr->first), static_cast<i64>(rr->second), ""}, "three_l");
      i64 want = p.legendre(2) * rep.x;
      *note = "S=" + std::to_string(S) + " expect=" + std::to_string(want);
      return S == want;
    }
    case CrossForm::eq_2_5: {
      u64 m7 = pv % 7;
      if (m7 != 1 && m7 != 2 && m7 != 4) return expect_zero();
      auto rr = represent(pv, 7, 1);
      i64 C = static_cast<i64>(rr->first);
      i64 want = ((pv + 1) / 2 % 2 == 0 ? 1 : -1) * 2 * jacobi_symbol(C, 7) * C;
      *note = "S=" + std::to_string(S) + " expect=" + std::to_string(want);
      return S == want;
    }
    case CrossForm::abs_u: {
      // d = 11: (u/11)u cannot carry the sign of S; assert |S| = u and the zero branch
      if (sym == -1) return expect_zero();
      auto reps = represent_all(pv, 11, 4);
      if (reps.empty()) return false;
      *note = "S=" + std::to_string(S) + " |S| expect=" + std::to_string(reps.front().first);
      return static_cast<u64>(S < 0 ? -S : S) == reps.front().first;
    }
    case CrossForm::signed_u: {
      if (sym == -1) return expect_zero();
      auto reps = represent_all(pv, cm.d, 4);
      if (reps.empty()) return false;
      for (auto [u, v] : reps) {
        i64 want = p.legendre(2) * jacobi_symbol(static_cast<i64>(u), cm.d) * static_cast<i64>(u);
        *note = "S=" + std::to_string(S) + " expect=" + std::to_string(want);
        if (S != want) return false;
      }
      return true;
    }
    default: return true;
  }
}

}  // namespace

std::vector<CheckResult> check_cm_supercongruences(const PrimeContext& c) {
  const Prime& p = c.p;
  const u64 pv = p.value(), p2 = p.p2();
  std::vector<CheckResult> out;
  for (const auto& cm : kCMCases) {
    auto r = make_check(cm.id, pv);
    bool excluded = false;
    for (u64 e : cm.excluded) excluded = excluded || e == pv;
    if (excluded || reduce_mod(cm.m_sum, pv) == 0) {
      set_skip(r, "excluded prime");
      out.push_back(r);
      continue;
    }
    const u64 x = p.inv2(p.reduce2(cm.m_sum));
    const u64 sum2 = sum_T_p2(c, x);
    const int sym = eval_sym(p, cm.sym_kind, cm.sym_val);
    r.params["symbol"] = std::to_string(sym);
    bool ok;
    if (sym == -1) {
      r.params["branch"] = "inert";
      ok = sum2 == 0;
      if (ok)
        set_pass_sides(r, std::to_string(sum2), "0", std::to_string(p2));
      else
        set_fail(r, std::to_string(sum2), "0", std::to_string(p2));
    } else {
      r.params["branch"] = "split";
      auto reps = represent_all(pv, cm.d, cm.scale);
      if (cm.odd_x) {
        std::erase_if(reps, [](auto& pr) { return pr.first % 2 == 0; });
      }
      if (reps.empty()) {
        set_fail(r, "no representation", "required", std::to_string(pv));
        out.push_back(r);
        continue;
      }
      const u64 xx = reps.front().first;
      const int tw = eval_sym(p, cm.twist_kind, cm.twist_val);
      const u64 rhs = p.reduce(tw * static_cast<i64>(cm.coef) * static_cast<i64>(p.mul(xx % pv, xx % pv)));
      r.params["x"] = std::to_string(xx);
      r.params["y"] = std::to_string(reps.front().second);
      ok = (sum2 % pv) == rhs;
      if (ok)
        set_pass_sides(r, std::to_string(sum2 % pv), std::to_string(rhs), std::to_string(pv));
      else
        set_fail(r, std::to_string(sum2 % pv), std::to_string(rhs), std::to_string(pv));
      r.witness["sum_mod_p2"] = std::to_string(sum2);
    }
    std::string note;
    if (!cross_check_charsum(p, cm, sym, &note)) {
      r.status = Status::fail;
      r.witness["cross_check"] = "charsum closed form mismatch: " + note;
    } else if (!note.empty()) {
      r.witness["cross_check"] = note;
    }
    out.push_back(r);
  }
  return out;
}

// -------------------------------------------------------------------------
// Conjecture probes
// -------------------------------------------------------------------------

std::vector<CheckResult> probe_conjecture_2_1(const PrimeContext& c, const EtaTables& eta) {
  const Prime& p = c.p;
  const u64 pv = p.value();
  struct Line {
    std::array<u64, 4> tuple;
    i64 m, n;
  };
  static const Line lines[] = {
      {{2, 2, 10, 10}, -12, -11}, {{2, 4, 6, 12}, -39, -70}, {{1, 3, 5, 15}, -3, -322},
      {{1, 2, 7, 14}, -75, -506}, {{4, 4, 8, 8}, -99, -378},
  };
  std::vector<CheckResult> out;
  int idx = 0;
  for (const auto& ln : lines) {
    ++idx;
    auto r = make_check("conj_2_1." + std::to_string(idx), pv);
    r.params["tuple"] = std::to_string(ln.tuple[0]) + "-" + std::to_string(ln.tuple[1]) + "-" +
                        std::to_string(ln.tuple[2]) + "-" + std::to_string(ln.tuple[3]);
    if (eta.degree < pv) {
      set_skip(r, "eta series not built to degree p");
      out.push_back(r);
      continue;
    }
    const i64 lhs = eta.coeff(ln.tuple, pv);
    const i64 S = char_sum_cubic(ln.m, ln.n, p);
    const i64 rhs = -jacobi_symbol(static_cast<i64>(pv), 3) * S;
    if (lhs == rhs)
      set_pass_sides(r, std::to_string(lhs), std::to_string(rhs), "integers");
    else
      set_fail(r, std::to_string(lhs), std::to_string(rhs), "integers");
    out.push_back(r);
  }
  return out;
}

CheckResult probe_eq_2_12(const PrimeContext& c, const EtaTables& eta) {
  const Prime& p = c.p;
  const u64 pv = p.value();
  auto r = make_check("eq_2_12", pv);
  if (pv % 4 != 3 || pv == 5) {
    set_skip(r, "statement requires p = 3 mod 4, p > 5");
    return r;
  }
  if (eta.degree < pv) {
    set_skip(r, "eta series not built to degree p");
    return r;
  }
  const auto qi = quartic_image_count(p);
  if (!qi.delta_defined) {
    set_skip(r, "delta undefined for this residue class");
    return r;
  }
  const i64 lhs = eta.coeff({2, 2, 10, 10}, pv);
  const i64 rhs = static_cast<i64>((5 * pv + 1) / 2) - 4 * qi.n_p + 2 * qi.delta;
  r.params["N_p"] = std::to_string(qi.n_p);
  r.params["delta"] = std::to_string(qi.delta);
  if (lhs == rhs)
    set_pass_sides(r, std::to_string(lhs), std::to_string(rhs), "integers");
  else
    set_fail(r, std::to_string(lhs), std::to_string(rhs), "integers");
  return r;
}

namespace {

struct LinearLine {
  u64 alpha, beta;
  i64 m;
  SymKind sym_kind;
  i64 sym_val;  // (val/p) or (p/val); val==1 means constant +1
  std::initializer_list<u64> excluded;
};

CheckResult probe_linear_line(const PrimeContext& c, const std::string& id, const LinearLine& ln,
                              bool use_T) {
  const Prime& p = c.p;
  const u64 pv = p.value(), p2 = p.p2();
  auto r = make_check(id, pv);
  r.params["m"] = std::to_string(ln.m);
  bool excluded = reduce_mod(ln.m, pv) == 0;
  for (u64 e : ln.excluded) excluded = excluded || e == pv;
  if (excluded) {
    set_skip(r, "excluded prime or p | m");
    return r;
  }
  const u64 x = p.inv2(p.reduce2(ln.m));
  const u64 lhs = use_T ? sum_T_weighted_p2(c, x, ln.alpha, ln.beta)
                        : sum_Z_weighted_p2(c, x, ln.alpha, ln.beta);
  int sym = ln.sym_val == 1 ? 1 : eval_sym(p, ln.sym_kind, ln.sym_val);
  const u64 rhs = p.reduce2(static_cast<i64>(ln.beta) * static_cast<i64>(pv) * sym);
  if (lhs == rhs)
    set_pass_sides(r, std::to_string(lhs), std::to_string(rhs), std::to_string(p2));
  else
    set_fail(r, std::to_string(lhs), std::to_string(rhs), std::to_string(p2));
  return r;
}

}  // namespace

std::vector<CheckResult> probe_conjecture_5_1(const PrimeContext& c) {
  static const LinearLine lines[] = {
      {63, 8, -3375, SymKind::value_over_p, -15, {3, 5}},
      {133, 8, 16581375, SymKind::value_over_p, -255, {3, 5, 17}},
      {28, 3, 8000, SymKind::value_over_p, -5, {5}},
      {63, 5, 287496, SymKind::value_over_p, -33, {11}},
      {11, 1, 54000, SymKind::value_over_p, -15, {5}},
      {506, 31, -12288000, SymKind::value_over_p, -30, {5}},
  };
  std::vector<CheckResult> out;
  int i = 0;
  for (const auto& ln : lines) out.push_back(probe_linear_line(c, "conj_5_1." + std::to_string(++i), ln, true));
  return out;
}

std::vector<CheckResult> probe_conjecture_5_2(const PrimeContext& c) {
  static const LinearLine lines[] = {
      {9, 4, 5, SymKind::p_on_top, 5, {5}},
      {5, 2, 16, SymKind::p_on_top, 1, {}},
      {9, 2, 50, SymKind::value_over_p, -1, {5}},
      {5, 1, 96, SymKind::value_over_p, -2, {}},
      {6, 1, 320, SymKind::p_on_top, 15, {5}},
      {90, 13, 896, SymKind::p_on_top, 7, {7}},
      {102, 11, 10400, SymKind::p_on_top, 39, {5, 13}},
  };
  std::vector<CheckResult> out;
  int i = 0;
  for (const auto& ln : lines) out.push_back(probe_linear_line(c, "conj_5_2." + std::to_string(++i), ln, false));
  return out;
}

std::vector<CheckResult> probe_conjecture_5_3(const PrimeContext& c) {
  static const LinearLine lines[] = {
      {3, 1, -16, SymKind::value_over_p, -1, {}},
      {15, 4, -49, SymKind::p_on_top, 3, {7}},
      {9, 2, -112, SymKind::p_on_top, 7, {7}},
      {99, 17, -400, SymKind::value_over_p, -1, {5}},
      {855, 109, -2704, SymKind::value_over_p, -1, {13}},
      {585, 58, -24304, SymKind::value_over_p, -31, {7, 31}},
  };
  std::vector<CheckResult> out;
  int i = 0;
  for (const auto& ln : lines) out.push_back(probe_linear_line(c, "conj_5_3." + std::to_string(++i), ln, false));
  return out;
}

// -------------------------------------------------------------------------
// Z_p conjectures 5.4 - 5.11
// -------------------------------------------------------------------------

namespace {

u64 val_4x2_2p(const Prime& p, u64 x) {  // 4x^2 - 2p mod p^2
  const u64 p2 = p.p2();
  return submod(mulmod(4, mulmod(x, x, p2), p2), (2 * p.value()) % p2, p2);
}

// a*x^2 + b*p mod p^2 with signed a, b small
u64 lin_val(const Prime& p, i64 a, u64 x, i64 b) {
  const u64 p2 = p.p2();
  u64 ax2 = mulmod(reduce_mod(a, p2), mulmod(x, x, p2), p2);
  return addmod(ax2, reduce_mod(b * static_cast<i64>(p.value()), p2), p2);
}

void finish_p2(CheckResult& r, const Prime& p, u64 lhs, u64 rhs) {
  if (lhs == rhs)
    set_pass_sides(r, std::to_string(lhs), std::to_string(rhs), std::to_string(p.p2()));
  else
    set_fail(r, std::to_string(lhs), std::to_string(rhs), std::to_string(p.p2()));
}

}  // namespace

std::vector<CheckResult> probe_Z_conjectures(const PrimeContext& c) {
  const Prime& p = c.p;
  const u64 pv = p.value(), p2 = p.p2();
  std::vector<CheckResult> out;
  auto Z = [&](i64 m) { return sum_Z_p2(c, p.inv2(p.reduce2(m))); };

  // ---- 5.4: Z_p(-16) ----
  {
    auto r = make_check("conj_5_4", pv);
    u64 lhs = Z(-16);
    if (pv % 4 == 3) {
      finish_p2(r, p, lhs, 0);
      r.params["branch"] = "3mod4";
    } else {
      auto rr = represent(pv, 1, 1);
      u64 u = rr->first, v = rr->second;
      if (u % 2 == 0) std::swap(u, v);  // u odd, v even
      u64 rhs;
      if (pv % 12 == 1) {
        if (v % 3 == 0) {
          rhs = lin_val(p, 4, u, -2);
          r.params["branch"] = "6|y";
        } else {
          rhs = p.sub2(0, lin_val(p, 4, u, -2));
          r.params["branch"] = "6|x-3";
        }
      } else {
        u64 w = mulmod(u % p2, v % p2, p2);
        i64 wi = static_cast<i64>(u) * static_cast<i64>(v);
        int sgn = (wi % 3 == 1) ? 1 : -1;  // (xy/3), xy > 0
        u64 rhs0 = mulmod(4, w, p2);
        rhs = sgn == 1 ? rhs0 : p.sub2(0, rhs0);
        r.params["branch"] = "5mod12";
      }
      r.params["x"] = std::to_string(u);
      r.params["y"] = std::to_string(v);
      finish_p2(r, p, lhs, rhs);
    }
    out.push_back(r);
  }

  // ---- 5.5: Z_p(96) ----
  {
    auto r = make_check("conj_5_5", pv);
    if (pv == 3) {
      set_skip(r, "p | 96");
    } else {
      u64 lhs = Z(96);
      u64 m8 = pv % 8;
      if (m8 == 1 || m8 == 3) {
        auto rr = represent(pv, 2, 1);
        u64 val = val_4x2_2p(p, rr->first);
        u64 rhs = jacobi_symbol(static_cast<i64>(pv), 3) == 1 ? val : p.sub2(0, val);
        r.params["x"] = std::to_string(rr->first);
        finish_p2(r, p, lhs, rhs);
      } else {
        finish_p2(r, p, lhs, 0);
      }
    }
    out.push_back(r);
  }

  // ---- 5.6: Z_p(-4) = Z_p(50) ----
  {
    auto r = make_check("conj_5_6", pv);
    if (pv == 5) {
      set_skip(r, "p | 50");
    } else {
      u64 l1 = Z(-4), l2 = Z(50);
      u64 rhs = 0;
      if (pv % 3 == 1) {
        auto rr = represent(pv, 3, 1);
        rhs = val_4x2_2p(p, rr->first);
        r.params["x"] = std::to_string(rr->first);
      }
      if (l1 == l2 && l1 == rhs) {
        set_pass_sides(r, std::to_string(l1), std::to_string(rhs), std::to_string(p2));
        r.witness["rhs2"] = std::to_string(l2);
      } else {
        set_fail(r, std::to_string(l1), std::to_string(rhs), std::to_string(p2));
        r.witness["rhs2"] = std::to_string(l2);
      }
    }
    out.push_back(r);
  }

  // ---- 5.7: Z_p(16) ----
  {
    auto r = make_check("conj_5_7", pv);
    if (pv == 5) {
      set_skip(r, "excluded prime");
    } else {
      u64 lhs = Z(16);
      u64 m20 = pv % 20;
      if (m20 == 1 || m20 == 9) {
        auto rr = represent(pv, 5, 1);
        r.params["x"] = std::to_string(rr->first);
        finish_p2(r, p, lhs, val_4x2_2p(p, rr->first));
      } else if (m20 == 3 || m20 == 7) {
        auto rr = represent(pv, 5, 2);
        r.params["x"] = std::to_string(rr->first);
        finish_p2(r, p, lhs, lin_val(p, 2, rr->first, -2));
      } else {
        finish_p2(r, p, lhs, 0);
      }
    }
    out.push_back(r);
  }

  // ---- 5.8: Z_p(32) ----
  {
    auto r = make_check("conj_5_8", pv);
    u64 lhs = Z(32);
    u64 m24 = pv % 24;
    if (m24 == 1 || m24 == 7) {
      auto rr = represent_form(pv, 1, 6);
      r.params["x"] = std::to_string(rr->first);
      finish_p2(r, p, lhs, val_4x2_2p(p, rr->first));
    } else if (m24 == 5 || m24 == 11) {
      auto rr = represent_form(pv, 2, 3);
      r.params["x"] = std::to_string(rr->first);
      finish_p2(r, p, lhs, lin_val(p, 8, rr->first, -2));
    } else {
      finish_p2(r, p, lhs, 0);
    }
    out.push_back(r);
  }

  // ---- 5.9: Z_p(5) = Z_p(-49) ----
  {
    auto r = make_check("conj_5_9", pv);
    if (pv == 5 || pv == 7) {
      set_skip(r, "p | m");
    } else {
      u64 l1 = Z(5), l2 = Z(-49);
      u64 m30 = pv % 30;
      u64 rhs = 0;
      if (m30 == 1 || m30 == 19) {
        auto rr = represent_form(pv, 1, 15);
        rhs = val_4x2_2p(p, rr->first);
        r.params["x"] = std::to_string(rr->first);
      } else if (m30 == 17 || m30 == 23) {
        auto rr = represent_form(pv, 3, 5);
        rhs = lin_val(p, -12, rr->first, 2);
        r.params["x"] = std::to_string(rr->first);
      }
      if (l1 == l2 && l1 == rhs) {
        set_pass_sides(r, std::to_string(l1), std::to_string(rhs), std::to_string(p2));
        r.witness["rhs2"] = std::to_string(l2);
      } else {
        set_fail(r, std::to_string(l1), std::to_string(rhs), std::to_string(p2));
        r.witness["rhs2"] = std::to_string(l2);
      }
    }
    out.push_back(r);
  }

  // ---- 5.10 / 5.11: first-match over the listed form shapes ----
  struct FamilyCase {
    const char* id;
    u64 b;
    i64 f;
  };
  static const FamilyCase fam10[] = {{"conj_5_10.7", 7, -112},
                                     {"conj_5_10.11", 11, -400},
                                     {"conj_5_10.19", 19, -2704},
                                     {"conj_5_10.31", 31, -24304},
                                     {"conj_5_10.59", 59, -1123600}};
  for (const auto& fc : fam10) {
    auto r = make_check(fc.id, pv);
    r.params["b"] = std::to_string(fc.b);
    if (pv == fc.b || reduce_mod(fc.f, pv) == 0) {
      set_skip(r, "excluded prime or p | f(b)");
      out.push_back(r);
      continue;
    }
    u64 lhs = Z(fc.f);
    struct Shape {
      u64 N_mult, A, B;
      i64 ca;
      i64 cb;  // value = ca*x^2 + cb*p
    };
    const Shape shapes[] = {{1, 1, 3 * fc.b, 4, -2},
                            {1, 3, fc.b, -12, 2},
                            {2, 1, 3 * fc.b, 2, -2},
                            {2, 3, fc.b, -6, 2}};
    int matched = -1;
    u64 xm = 0;
    std::string multi;
    for (int i = 0; i < 4; ++i) {
      auto rr = represent_form(shapes[i].N_mult * pv, shapes[i].A, shapes[i].B);
      if (rr) {
        if (matched < 0) {
          matched = i;
          xm = rr->first;
        } else {
          multi += (multi.empty() ? "" : ",") + std::to_string(i);
        }
      }
    }
    if (!multi.empty()) r.witness["multi_match"] = multi;
    if (jacobi_symbol(-3 * static_cast<i64>(fc.b), pv) == -1) {
      r.params["branch"] = "inert";
      finish_p2(r, p, lhs, 0);
    } else if (matched < 0) {
      set_fail(r, std::to_string(lhs), "no form shape represents p", std::to_string(p2));
    } else {
      r.params["branch"] = "shape" + std::to_string(matched);
      r.params["x"] = std::to_string(xm);
      finish_p2(r, p, lhs, lin_val(p, shapes[matched].ca, xm, shapes[matched].cb));
    }
    out.push_back(r);
  }
  static const FamilyCase fam11[] = {{"conj_5_11.5", 5, 320},
                                     {"conj_5_11.7", 7, 896},
                                     {"conj_5_11.13", 13, 10400},
                                     {"conj_5_11.17", 17, 39200}};
  for (const auto& fc : fam11) {
    auto r = make_check(fc.id, pv);
    r.params["b"] = std::to_string(fc.b);
    if (pv == fc.b || reduce_mod(fc.f, pv) == 0) {
      set_skip(r, "excluded prime or p | f(b)");
      out.push_back(r);
      continue;
    }
    u64 lhs = Z(fc.f);
    struct Shape {
      u64 A, B;
      i64 ca, cb;
    };
    const Shape shapes[] = {{1, 6 * fc.b, 4, -2},
                            {2, 3 * fc.b, 8, -2},
                            {3, 2 * fc.b, -12, 2},
                            {6, fc.b, -24, 2}};
    int matched = -1;
    u64 xm = 0;
    std::string multi;
    for (int i = 0; i < 4; ++i) {
      auto rr = represent_form(pv, shapes[i].A, shapes[i].B);
      if (rr) {
        if (matched < 0) {
          matched = i;
          xm = rr->first;
        } else {
          multi += (multi.empty() ? "" : ",") + std::to_string(i);
        }
      }
    }
    if (!multi.empty()) r.witness["multi_match"] = multi;
    if (jacobi_symbol(-6 * static_cast<i64>(fc.b), pv) == -1) {
      r.params["branch"] = "inert";
      finish_p2(r, p, lhs, 0);
    } else if (matched < 0) {
      set_fail(r, std::to_string(lhs), "no form shape represents p", std::to_string(p2));
    } else {
      r.params["branch"] = "shape" + std::to_string(matched);
      r.params["x"] = std::to_string(xm);
      finish_p2(r, p, lhs, lin_val(p, shapes[matched].ca, xm, shapes[matched].cb));
    }
    out.push_back(r);
  }
  return out;
}

// -------------------------------------------------------------------------
// Eta-quotient oracle: the Eichler relation for level 11
// -------------------------------------------------------------------------

CheckResult check_etaq_eichler(const PrimeContext& c, const EtaTables& eta) {
  const Prime& p = c.p;
  const u64 pv = p.value();
  auto r = make_check("etaq_eichler", pv);
  if (eta.degree < pv) {
    set_skip(r, "eta series not built to degree p");
    return r;
  }
  const i64 cp = eta.coeff({1, 1, 11, 11}, pv);
  const i64 from_count = eichler_c(p);
  const i64 from_charsum = -p.legendre(6) * char_sum_cubic(-12, 38, p);
  r.witness["rhs2"] = std::to_string(from_charsum);
  if (cp == from_count && cp == from_charsum)
    set_pass_sides(r, std::to_string(cp), std::to_string(from_count), "integers");
  else
    set_fail(r, std::to_string(cp), std::to_string(from_count), "integers");
  return r;
}

// -------------------------------------------------------------------------
// Prime-independent section 3 identities
// -------------------------------------------------------------------------

std::vector<CheckResult> check_section3_global(long lemma31_bound, long wz_bound) {
  std::vector<CheckResult> out;
  {
    auto r = make_check("lemma_3_1", 0);
    r.params["n_max"] = std::to_string(lemma31_bound);
    bool ok = true;
    for (long n = 0; n <= lemma31_bound && ok; ++n) {
      auto [l, rr] = lemma31_sides(n);
      if (l != rr) {
        set_fail(r, l.str(), rr.str(), "integers");
        r.witness["n"] = std::to_string(n);
        ok = false;
      }
    }
    if (ok) set_pass_sides(r, "all n", "all n", "integers");
    out.push_back(r);
  }
  {
    auto r = make_check("wz_certificate", 0);
    r.params["m_max"] = std::to_string(wz_bound);
    bool ok = true;
    for (int i = 1; i <= 2 && ok; ++i) {
      for (long m = 0; m <= wz_bound && ok; ++m) {
        for (long k = 0; k <= m && ok; ++k) {
          if (!wz_certificate_check(i, m, k)) {
            set_fail(r, "telescoping identity", "violated", "integers");
            r.witness["i"] = std::to_string(i);
            r.witness["m"] = std::to_string(m);
            r.witness["k"] = std::to_string(k);
            ok = false;
          }
        }
      }
    }
    if (ok) set_pass_sides(r, "all (i,m,k)", "all (i,m,k)", "integers");
    out.push_back(r);
  }
  return out;
}

// -------------------------------------------------------------------------
// Self-audit
// -------------------------------------------------------------------------

std::vector<CheckResult> self_audit(const std::vector<CheckResult>& results) {
  std::vector<CheckResult> violations;
  for (const auto& r : results) {
    if (r.status != Status::pass) continue;
    auto l = r.witness.find("lhs");
    auto rr = r.witness.find("rhs");
    if (l == r.witness.end() || rr == r.witness.end()) continue;
    bool ok = l->second == rr->second;
    auto r2 = r.witness.find("rhs2");
    if (ok && r2 != r.witness.end() && r2->second != l->second &&
        l->second != "all t" && l->second != "all m") {
      // three-way witnesses must also agree when they are plain residues
      ok = false;
    }
    if (!ok) {
      CheckResult v;
      v.check_id = "self_audit";
      v.p = r.p;
      v.status = Status::fail;
      v.params["check_id"] = r.check_id;
      v.witness = r.witness;
      violations.push_back(v);
    }
  }
  return violations;
}

}  // namespace conglab
