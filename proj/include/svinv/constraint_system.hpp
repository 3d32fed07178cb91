#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "svinv/algebra.hpp"
#include "svinv/sparse_linalg.hpp"

namespace svinv {

using BasisPair = std::pair<BasisElement, BasisElement>;

/// Linear constraints over unknown pairings. Column j of `matrix` is the
/// unknown `unknowns[j]`; unknowns follow the window basis order.
struct ConstraintSystem {
  SparseMatrix matrix;
  std::vector<BasisPair> unknowns;

  std::optional<std::size_t> column_of(const BasisPair& p) const {
    auto it = column_index.find(p);
    if (it == column_index.end()) return std::nullopt;
    return it->second;
  }

  std::map<BasisPair, std::size_t> column_index;
};

}  // namespace svinv
