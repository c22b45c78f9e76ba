#include "conglab/quadform.hpp"

#include <cmath>

namespace conglab {

namespace {

std::optional<u64> perfect_sqrt(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r == n) return r;
  return std::nullopt;
}

}  // namespace

std::vector<std::pair<u64, u64>> represent_all(u64 p, u64 d, int scale) {
  const u64 n = static_cast<u64>(scale) * p;
  std::vector<std::pair<u64, u64>> out;
  for (u64 x = 0; x * x <= n; ++x) {
    u64 r = n - x * x;
    if (r % d) continue;
    if (auto y = perfect_sqrt(r / d)) out.emplace_back(x, *y);
  }
  return out;
}

std::optional<std::pair<u64, u64>> represent(u64 p, u64 d, int scale) {
  if (scale == 1 && p > 3 && is_prime_u64(p) && d >= 1 && d < p) {
    if (auto c = cornacchia(Prime(p), d)) {
      auto [x, y] = *c;
      if (d == 1 && y < x) std::swap(x, y);  // smallest-x convention
      return std::make_pair(x, y);
    }
    // fall through: cornacchia handles (-d/p) = 1; remaining cases have no
    // primitive solution, but d | p-type corner cases are caught below
  }
  auto all = represent_all(p, d, scale);
  if (all.empty()) return std::nullopt;
  return all.front();
}

std::optional<std::pair<u64, u64>> represent_form(u64 n, u64 a, u64 b) {
  for (u64 x = 0; a * x * x <= n; ++x) {
    u64 r = n - a * x * x;
    if (r % b) continue;
    if (auto y = perfect_sqrt(r / b)) return std::make_pair(x, *y);
  }
  return std::nullopt;
}

std::optional<std::pair<u64, u64>> cornacchia(const Prime& p, u64 d) {
  const u64 pv = p.value();
  auto r0 = p.sqrt_mod(p.reduce(-static_cast<i64>(d)));
  if (!r0) return std::nullopt;
  u64 r = *r0;
  if (r == 0) return std::nullopt;
  if (2 * r < pv) r = pv - r;  // start from the root in (p/2, p)
  u64 a = pv, b = r;
  while (b * b > pv) {
    u64 t = a % b;
    a = b;
    b = t;
  }
  u64 rem = pv - b * b;
  if (rem % d) return std::nullopt;
  auto y = perfect_sqrt(rem / d);
  if (!y) return std::nullopt;
  return std::make_pair(b, *y);
}

namespace {

[[noreturn]] void rule_fail(const std::string& rule, const FormRep& rep) {
  throw std::domain_error("normalize: rule '" + rule + "' unsatisfiable for x=" +
                          std::to_string(rep.x) + " y=" + std::to_string(rep.y));
}

}  // namespace

FormRep normalize(FormRep rep, const std::string& rule) {
  rep.rule = rule;
  auto& x = rep.x;
  auto& y = rep.y;
  auto flip_to = [&](i64& v, i64 target, i64 mod) {
    i64 r = ((v % mod) + mod) % mod;
    if (r == ((target % mod) + mod) % mod) return true;
    r = ((-v % mod) + mod) % mod;
    if (r == ((target % mod) + mod) % mod) {
      v = -v;
      return true;
    }
    return false;
  };
  if (rule == "gauss_a") {
    if (x % 2 == 0) std::swap(x, y);
    if (x % 2 == 0) rule_fail(rule, rep);
    if (!flip_to(x, 1, 4)) rule_fail(rule, rep);
    if (y < 0) y = -y;
  } else if (rule == "three_a" || rule == "three_l") {
    if (!flip_to(x, 1, 3)) rule_fail(rule, rep);
    if (y < 0) y = -y;
  } else if (rule == "four_x") {
    if (x % 2 == 0 || !flip_to(x, 1, 4)) rule_fail(rule, rep);
  } else if (rule == "four_y") {
    if (y % 2 == 0 || !flip_to(y, 1, 4)) rule_fail(rule, rep);
  } else if (rule == "eight_x") {
    if (x % 2 != 0 || !flip_to(x, 2, 8)) rule_fail(rule, rep);
  } else if (rule == "eight_y") {
    if (y % 2 != 0 || !flip_to(y, 2, 8)) rule_fail(rule, rep);
  } else if (rule == "three_xy") {
    if (!flip_to(y, ((x % 3) + 3) % 3, 3)) rule_fail(rule, rep);
  } else {
    throw std::invalid_argument("normalize: unknown rule '" + rule + "'");
  }
  return rep;
}

}  // namespace conglab
