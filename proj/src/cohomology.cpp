#include "svinv/cohomology.hpp"

#include "svinv/bracket_table.hpp"
#include "svinv/errors.hpp"
#include "svinv/inv_solver.hpp"

namespace svinv {

Rational BilinearMap::get(const BasisElement& a, const BasisElement& b) const {
  auto it = entries_.find({a, b});
  return it == entries_.end() ? Rational(0) : it->second;
}

void BilinearMap::set(const BasisElement& a, const BasisElement& b, Rational value) {
  if (value.is_zero()) {
    entries_.erase({a, b});
  } else {
    entries_[{a, b}] = std::move(value);
  }
}

void BilinearMap::add(const BasisElement& a, const BasisElement& b, const Rational& value) {
  set(a, b, get(a, b) + value);
}

std::string to_string(CocycleKind k) { return k == CocycleKind::Lie ? "lie" : "leibniz"; }

bool operator==(const CocycleViolation& a, const CocycleViolation& b) {
  return a.triple == b.triple && a.residual == b.residual;
}

namespace {

using State = BracketTable::Entry::State;

// Column layout of a cocycle system over a window basis of size n.
class PairColumns {
 public:
  PairColumns(const WindowBasis& basis, CocycleKind kind) : n_(basis.size()), kind_(kind) {
    col_.assign(n_ * n_, -1);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = kind == CocycleKind::Lie ? i + 1 : 0; j < n_; ++j) {
        col_[i * n_ + j] = static_cast<std::ptrdiff_t>(pairs_.size());
        pairs_.emplace_back(i, j);
      }
    }
  }

  // Adds coef * psi(i, j) to row.
  void add(SparseRow& row, std::size_t i, std::size_t j, const Rational& coef) const {
    if (kind_ == CocycleKind::Leibniz) {
      row.emplace_back(static_cast<std::size_t>(col_[i * n_ + j]), coef);
    } else if (i < j) {
      row.emplace_back(static_cast<std::size_t>(col_[i * n_ + j]), coef);
    } else if (j < i) {
      row.emplace_back(static_cast<std::size_t>(col_[j * n_ + i]), -coef);
    }
  }

  const std::vector<std::pair<std::size_t, std::size_t>>& pairs() const { return pairs_; }

 private:
  std::size_t n_;
  CocycleKind kind_;
  std::vector<std::ptrdiff_t> col_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
};

}  // namespace

ConstraintSystem assemble_cocycle_system(const AlgebraParams& params, const Window& window,
                                         CocycleKind kind) {
  window.validate();
  if (window.bound < 2) {
    throw WindowError("window bound " + std::to_string(window.bound) + " is too small (need M >= 2)");
  }
  const WindowBasis basis(params, window.bound);
  const BracketTable table(params, basis);
  const std::size_t n = basis.size();
  const PairColumns cols(basis, kind);

  ConstraintSystem sys;
  for (const auto& [i, j] : cols.pairs()) {
    sys.column_index.emplace(BasisPair{basis[i], basis[j]}, sys.unknowns.size());
    sys.unknowns.emplace_back(basis[i], basis[j]);
  }
  sys.matrix = SparseMatrix(0, sys.unknowns.size());

  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& xy = table(x, y);
      if (xy.state == State::OutOfWindow) continue;
      for (std::size_t z = 0; z < n; ++z) {
        const auto& yz = table(y, z);
        const auto& xz = table(x, z);
        if (yz.state == State::OutOfWindow || xz.state == State::OutOfWindow) continue;
        SparseRow row;
        if (yz.state == State::InWindow) cols.add(row, x, yz.target, yz.coef);
        if (xz.state == State::InWindow) cols.add(row, y, xz.target, -xz.coef);
        if (xy.state == State::InWindow) cols.add(row, xy.target, z, -xy.coef);
        canonicalize(row);
        if (!row.empty()) sys.matrix.add_row(std::move(row));
      }
    }
  }
  return sys;
}

CocycleSolution solve_cocycles_core(const AlgebraParams& params, const Window& window,
                                    CocycleKind kind, std::vector<BilinearMap>* keep_kernel) {
  const ConstraintSystem sys = assemble_cocycle_system(params, window, kind);
  const std::vector<SparseRow> null = nullspace_sparse(sys.matrix);

  std::vector<std::ptrdiff_t> core_pos(sys.unknowns.size(), -1);
  std::vector<std::size_t> core_cols;
  for (std::size_t c = 0; c < sys.unknowns.size(); ++c) {
    const auto& [a, b] = sys.unknowns[c];
    if (window.in_core(params.s, a) && window.in_core(params.s, b)) {
      core_pos[c] = static_cast<std::ptrdiff_t>(core_cols.size());
      core_cols.push_back(c);
    }
  }

  auto to_map = [&](const SparseRow& v, auto column_of) {
    BilinearMap psi(params);
    for (const auto& [c, x] : v) {
      const auto& [a, b] = sys.unknowns[column_of(c)];
      psi.set(a, b, x);
      if (kind == CocycleKind::Lie) psi.set(b, a, -x);
    }
    return psi;
  };

  CocycleSolution sol;
  sol.kind = kind;
  sol.window = window;
  sol.kernel_dimension = null.size();
  EchelonBuilder projected(core_cols.size());
  for (const auto& v : null) {
    SparseRow proj;
    for (const auto& [c, x] : v) {
      if (core_pos[c] >= 0) proj.emplace_back(static_cast<std::size_t>(core_pos[c]), x);
    }
    projected.insert(std::move(proj));
    if (keep_kernel) keep_kernel->push_back(to_map(v, [](std::size_t c) { return c; }));
  }
  for (const auto& row : projected.finish()) {
    sol.core_basis.push_back(to_map(row, [&](std::size_t c) { return core_cols[c]; }));
  }
  sol.core_dimension = sol.core_basis.size();
  return sol;
}

BilinearMap coboundary_map(const LinearFunctional& f, const AlgebraParams& params,
                           const Window& window) {
  window.validate();
  const WindowBasis basis(params, window.bound);
  BilinearMap psi(params);
  for (const auto& x : basis.elements()) {
    for (const auto& y : basis.elements()) {
      auto t = bracket_basis(params, x, y);
      if (!t) continue;
      auto it = f.find(t->basis);
      if (it != f.end()) psi.set(x, y, t->coef * it->second);
    }
  }
  return psi;
}

BilinearForm xi_symmetrize(const BilinearMap& psi) {
  BilinearForm out(psi.params());
  for (const auto& [k, v] : psi.entries()) out.add(k.first, k.second, v);
  // Diagonal pairs receive psi(a, a) twice.
  for (const auto& [k, v] : psi.entries()) {
    if (k.first == k.second) out.add(k.first, k.second, v);
  }
  return out;
}

std::vector<CocycleViolation> cocycle_residuals(const BilinearMap& psi, const Window& window) {
  window.validate();
  const AlgebraParams& params = psi.params();
  const WindowBasis basis(params, window.bound);
  const BracketTable table(params, basis);
  const std::size_t n = basis.size();
  std::vector<Rational> dense(n * n);
  for (const auto& [k, v] : psi.entries()) {
    auto i = basis.index_of(k.first);
    auto j = basis.index_of(k.second);
    if (i && j) dense[*i * n + *j] = v;
  }
  std::vector<CocycleViolation> out;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& xy = table(x, y);
      if (xy.state == State::OutOfWindow) continue;
      for (std::size_t z = 0; z < n; ++z) {
        const auto& yz = table(y, z);
        const auto& xz = table(x, z);
        if (yz.state == State::OutOfWindow || xz.state == State::OutOfWindow) continue;
        Rational r;
        if (yz.state == State::InWindow) r += yz.coef * dense[x * n + yz.target];
        if (xz.state == State::InWindow) r -= xz.coef * dense[y * n + xz.target];
        if (xy.state == State::InWindow) r -= xy.coef * dense[xy.target * n + z];
        if (!r.is_zero()) out.push_back({{basis[x], basis[y], basis[z]}, std::move(r)});
      }
    }
  }
  return out;
}

BilinearMap virasoro_cocycle(const AlgebraParams& params, const Window& window) {
  BilinearMap omega(params);
  for (std::int64_t m = -window.bound; m <= window.bound; ++m) {
    omega.set(BasisElement::L(m), BasisElement::L(-m), Rational(m * m * m - m));
  }
  return omega;
}

CohomologyDims cohomology_dims(const AlgebraParams& params, const Window& window) {
  CohomologyDims d;
  const CocycleSolution lie = solve_cocycles_core(params, window, CocycleKind::Lie);
  const CocycleSolution leib = solve_cocycles_core(params, window, CocycleKind::Leibniz);
  d.cocycles_core = lie.core_dimension;
  d.leibniz_cocycles_core = leib.core_dimension;

  // Core pairs a < b as coordinates for coboundaries.
  const WindowBasis basis(params, window.bound);
  const BracketTable table(params, basis);
  std::vector<std::size_t> core;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (window.in_core(params.s, basis[i])) core.push_back(i);
  }
  std::vector<SparseRow> by_target(basis.size());
  std::size_t col = 0;
  for (std::size_t a = 0; a < core.size(); ++a) {
    for (std::size_t b = a + 1; b < core.size(); ++b, ++col) {
      const auto& e = table(core[a], core[b]);
      if (e.state == State::InWindow) by_target[e.target].emplace_back(col, e.coef);
    }
  }
  EchelonBuilder cob(col);
  for (auto& row : by_target) cob.insert(std::move(row));
  d.coboundaries_core = cob.rank();

  d.h2_core = d.cocycles_core - d.coboundaries_core;
  d.hl2_core = d.leibniz_cocycles_core - d.coboundaries_core;

  std::map<BasisPair, std::size_t> sym_col;
  for (std::size_t a = 0; a < core.size(); ++a) {
    for (std::size_t b = a; b < core.size(); ++b) {
      sym_col.emplace(BasisPair{basis[core[a]], basis[core[b]]}, sym_col.size());
    }
  }
  EchelonBuilder xi(sym_col.size());
  for (const auto& psi : leib.core_basis) {
    const BilinearForm sym = xi_symmetrize(psi);
    SparseRow row;
    for (const auto& [k, v] : sym.entries()) row.emplace_back(sym_col.at(k), v);
    xi.insert(std::move(row));
  }
  d.xi_image_dim = xi.rank();

  d.inv_dim = solve_truncated(params, window).projected_basis.size();
  return d;
}

ChiAudit audit_printed_chi(const AlgebraParams& params, const Window& window) {
  ChiAudit audit;
  audit.tag = classify_tag(params, Convention::Printed);
  if (audit.tag == FamilyTag::Zero) return audit;
  const BilinearForm printed = closed_form(params, audit.tag, Window{window.bound, 0});
  BilinearMap one_sided(params);
  BilinearMap symmetric(params);
  for (const auto& [k, v] : printed.entries()) {
    one_sided.set(k.first, k.second, v);
    // Y-Y components are listed for every p, so both orders appear.
    if (k.first.family == Family::Y && k.second.family == Family::Y) {
      one_sided.set(k.second, k.first, v);
    }
    symmetric.set(k.first, k.second, v);
    symmetric.set(k.second, k.first, v);
  }
  auto r1 = cocycle_residuals(one_sided, window);
  auto r2 = cocycle_residuals(symmetric, window);
  audit.one_sided_violations = r1.size();
  audit.symmetric_violations = r2.size();
  if (!r1.empty()) audit.one_sided_witness = r1.front();
  if (!r2.empty()) audit.symmetric_witness = r2.front();
  return audit;
}

CohomologyReport cohomology_report(const AlgebraParams& params, const Window& window) {
  window.validate();
  CohomologyReport rep;
  rep.params = params;
  rep.window = window;
  rep.dims = cohomology_dims(params, window);
  rep.next_dims = cohomology_dims(params, Window{window.bound + 2, window.core});
  rep.stabilized = rep.dims == rep.next_dims;
  rep.gap = static_cast<std::int64_t>(rep.dims.hl2_core) - static_cast<std::int64_t>(rep.dims.h2_core) -
            static_cast<std::int64_t>(rep.dims.xi_image_dim);
  if (classify_tag(params, Convention::Printed) != FamilyTag::Zero) {
    rep.chi_audit = audit_printed_chi(params, window);
  }
  return rep;
}

}  // namespace svinv
