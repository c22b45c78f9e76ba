#pragma once

#include <optional>
#include <string>

#include "conglab/arith.hpp"

namespace conglab {

/// Normalized representation scale*p = x^2 + d*y^2 with signed x, y and the
/// congruence rule used to fix signs.
struct FormRep {
  int scale = 1;  // 1, 2 or 4
  u64 d = 1;
  i64 x = 0;
  i64 y = 0;
  std::string rule;
};

/// Nonnegative solution of scale*p = x^2 + d y^2 with smallest x >= 0, if any.
std::optional<std::pair<u64, u64>> represent(u64 p, u64 d, int scale);

/// All nonnegative solutions (ascending x).
std::vector<std::pair<u64, u64>> represent_all(u64 p, u64 d, int scale);

/// Smallest-x nonnegative solution of N = A x^2 + B y^2 (general binary form).
std::optional<std::pair<u64, u64>> represent_form(u64 n, u64 a, u64 b);

/// Cornacchia's algorithm for p = x^2 + d y^2, p prime, 0 < d < p.
/// Returns a solution or nullopt (no solution / algorithm inapplicable).
std::optional<std::pair<u64, u64>> cornacchia(const Prime& p, u64 d);

// Sign-normalization rules. Each flips signs (never magnitudes) so the stated
// congruence holds; throws std::domain_error when the rule is unsatisfiable
// for the given parity split.
//
//   gauss_a:   p = a^2 + b^2, a odd (swapping if needed), 4 | a-1, b >= 0
//   three_a:   x = A with 3 | A-1 (flip x), y >= 0
//   three_l:   same as three_a (4p = L^2+27M^2 usage)
//   four_x:    4 | x-1 (x odd; flip x), y untouched
//   four_y:    4 | y-1 (y odd; flip y), x untouched
//   eight_x:   8 | x-2 (x = 2 mod 4; flip x), y untouched
//   eight_y:   8 | y-2
//   three_xy:  3 | x-y (flip y; x already fixed)
FormRep normalize(FormRep rep, const std::string& rule);

}  // namespace conglab
