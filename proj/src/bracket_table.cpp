#include "svinv/bracket_table.hpp"

namespace svinv {

BracketTable::BracketTable(const AlgebraParams& params, const WindowBasis& basis)
    : n_(basis.size()), entries_(n_ * n_) {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      auto t = bracket_basis(params, basis[i], basis[j]);
      if (!t) continue;
      Entry& e = entries_[i * n_ + j];
      if (auto k = basis.index_of(t->basis)) {
        e.state = Entry::State::InWindow;
        e.target = *k;
        e.coef = std::move(t->coef);
      } else {
        e.state = Entry::State::OutOfWindow;
      }
    }
  }
}

}  // namespace svinv
