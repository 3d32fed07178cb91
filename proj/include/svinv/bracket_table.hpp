#pragma once

#include <cstddef>
#include <vector>

#include "svinv/algebra.hpp"

namespace svinv {

/// Brackets of all ordered pairs of a window basis, computed once.
class BracketTable {
 public:
  struct Entry {
    enum class State : unsigned char { Zero, InWindow, OutOfWindow };
    State state = State::Zero;
    std::size_t target = 0;  // window index of the result when InWindow
    Rational coef;
  };

  BracketTable(const AlgebraParams& params, const WindowBasis& basis);

  const Entry& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::size_t size() const { return n_; }

  /// True when the bracket vanishes or lands inside the window.
  bool usable(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j].state != Entry::State::OutOfWindow;
  }

 private:
  std::size_t n_;
  std::vector<Entry> entries_;
};

}  // namespace svinv
