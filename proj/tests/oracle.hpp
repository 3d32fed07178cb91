#pragma once
// Test-only oracles written independently of the library internals: dense
// Gaussian elimination on raw GMP rationals and literal bracket formulas.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Dense = std::vector<std::vector<Q>>;

inline std::size_t dense_rank(Dense a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || sgn(a[r][c]) == 0) continue;
      const Q f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Literal structure constants: returns (family, twice-mode, coefficient) of
/// [x, y] for families 0=L, 1=Y, 2=M, or nullopt when zero.
struct Basis {
  int family;
  std::int64_t twice;
};

inline std::optional<std::pair<Basis, Q>> bracket(const Q& lambda, const Q& mu, Basis x,
                                                  Basis y) {
  const Q a(x.twice, 2);
  const Q b(y.twice, 2);
  auto make = [&](int fam, Q c) -> std::optional<std::pair<Basis, Q>> {
    c.canonicalize();
    if (sgn(c) == 0) return std::nullopt;
    return std::make_pair(Basis{fam, x.twice + y.twice}, c);
  };
  if (x.family == 0 && y.family == 0) return make(0, b - a);
  if (x.family == 0 && y.family == 1) return make(1, b - (lambda + 1) * a / 2 + mu);
  if (x.family == 1 && y.family == 0) return make(1, -(a - (lambda + 1) * b / 2 + mu));
  if (x.family == 0 && y.family == 2) return make(2, b - lambda * a + 2 * mu);
  if (x.family == 2 && y.family == 0) return make(2, -(a - lambda * b + 2 * mu));
  if (x.family == 1 && y.family == 1) return make(2, b - a);
  return std::nullopt;
}

}  // namespace oracle
