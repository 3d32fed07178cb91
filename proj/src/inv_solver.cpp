#include "svinv/inv_solver.hpp"

#include "svinv/bracket_table.hpp"
#include "svinv/errors.hpp"

namespace svinv {

ConstraintSystem assemble_invariance_system(const AlgebraParams& params, const Window& window,
                                            bool weight_filter) {
  window.validate();
  if (window.bound < 2) {
    throw WindowError("window bound " + std::to_string(window.bound) + " is too small (need M >= 2)");
  }
  const WindowBasis basis(params, window.bound);
  const BracketTable table(params, basis);
  const std::size_t n = basis.size();

  std::vector<Rational> weight(n);
  for (std::size_t i = 0; i < n; ++i) weight[i] = ad_weight(params, basis[i]);

  ConstraintSystem sys;
  std::vector<std::ptrdiff_t> column(n * n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (weight_filter && !(weight[i] + weight[j]).is_zero()) continue;
      const auto c = static_cast<std::ptrdiff_t>(sys.unknowns.size());
      column[i * n + j] = c;
      column[j * n + i] = c;
      sys.column_index.emplace(BasisPair{basis[i], basis[j]}, sys.unknowns.size());
      sys.unknowns.emplace_back(basis[i], basis[j]);
    }
  }

  using State = BracketTable::Entry::State;
  sys.matrix = SparseMatrix(0, sys.unknowns.size());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& xy = table(x, y);
      if (xy.state == State::OutOfWindow) continue;
      for (std::size_t z = 0; z < n; ++z) {
        const auto& yz = table(y, z);
        if (yz.state == State::OutOfWindow) continue;
        SparseRow row;
        // phi([x,y], z) - phi(x, [y,z]); filtered-out pairs are known zeros.
        if (xy.state == State::InWindow) {
          const auto c = column[xy.target * n + z];
          if (c >= 0) row.emplace_back(static_cast<std::size_t>(c), xy.coef);
        }
        if (yz.state == State::InWindow) {
          const auto c = column[x * n + yz.target];
          if (c >= 0) row.emplace_back(static_cast<std::size_t>(c), -yz.coef);
        }
        canonicalize(row);
        if (!row.empty()) sys.matrix.add_row(std::move(row));
      }
    }
  }
  return sys;
}

TruncatedKernel solve_truncated(const AlgebraParams& params, const Window& window,
                                bool weight_filter) {
  const ConstraintSystem sys = assemble_invariance_system(params, window, weight_filter);
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

  TruncatedKernel out;
  EchelonBuilder projected(core_cols.size());
  for (const auto& v : null) {
    BilinearForm form(params);
    SparseRow proj;
    for (const auto& [c, x] : v) {
      form.set(sys.unknowns[c].first, sys.unknowns[c].second, x);
      if (core_pos[c] >= 0) proj.emplace_back(static_cast<std::size_t>(core_pos[c]), x);
    }
    out.kernel.push_back(std::move(form));
    projected.insert(std::move(proj));
  }
  for (const auto& row : projected.finish()) {
    BilinearForm form(params);
    for (const auto& [c, x] : row) {
      const auto& [a, b] = sys.unknowns[core_cols[c]];
      form.set(a, b, x);
    }
    out.projected_basis.push_back(std::move(form));
  }
  return out;
}

InvSolution solve_invariant_forms(const AlgebraParams& params, const Window& window,
                                  bool weight_filter) {
  window.validate();
  TruncatedKernel here = solve_truncated(params, window, weight_filter);
  const TruncatedKernel next =
      solve_truncated(params, Window{window.bound + 2, window.core}, weight_filter);

  InvSolution sol;
  sol.params = params;
  sol.window = window;
  sol.weight_filter = weight_filter;
  sol.kernel = std::move(here.kernel);
  sol.projected_basis = std::move(here.projected_basis);
  sol.projected_dimension = sol.projected_basis.size();
  sol.next_projected_dimension = next.projected_basis.size();
  sol.stabilized = sol.projected_dimension == sol.next_projected_dimension;
  return sol;
}

std::optional<Violation> minimal_violation(const BilinearForm& form, const Window& window) {
  const AlgebraParams& p = form.params();
  if (auto m0 = p.neg_two_mu()) {
    const BasisElement x = BasisElement::L(1);
    const BasisElement y = BasisElement::L(-1);
    const BasisElement z{Family::M, *m0};
    const BasisElement yz{Family::M, *m0 - Mode::integer(1)};
    if (window.contains(p.s, z) && window.contains(p.s, yz) && window.bound >= 1) {
      Rational r = invariance_residual(form, x, y, z);
      if (!r.is_zero()) return Violation{{x, y, z}, std::move(r)};
    }
  }
  auto all = invariance_violations(form, window);
  if (all.empty()) return std::nullopt;
  return all.front();
}

DiscrepancyReport compare_with_classification(const InvSolution& solution,
                                              const AlgebraParams& params) {
  if (!solution.stabilized) {
    throw UnstabilizedError("projected dimension changed from " +
                            std::to_string(solution.projected_dimension) + " to " +
                            std::to_string(solution.next_projected_dimension) +
                            " between M=" + std::to_string(solution.window.bound) + " and M=" +
                            std::to_string(solution.window.bound + 2) +
                            "; enlarge the window bound M");
  }
  DiscrepancyReport rep;
  rep.params = params;
  rep.window = solution.window;
  rep.stabilized = solution.stabilized;
  rep.solver_dim = solution.projected_dimension;
  rep.printed_tag = classify_tag(params, Convention::Printed);
  rep.lemma_tag = classify_tag(params, Convention::Lemma);
  rep.printed_dim = rep.printed_tag == FamilyTag::Zero ? 0 : 1;
  rep.lemma_dim = rep.lemma_tag == FamilyTag::Zero ? 0 : 1;
  if (rep.solver_dim == 1) rep.generator = solution.projected_basis.front();

  const Window core_window{solution.window.core, 0};
  const Window full_window{solution.window.bound, 0};

  auto check = [&](Convention conv, FamilyTag tag, int dim) {
    bool proportional = false;
    if (dim == 1 && rep.generator) {
      proportional =
          proportionality(*rep.generator, closed_form(params, tag, core_window)).has_value();
    }
    const bool match = static_cast<int>(rep.solver_dim) == dim && (dim == 0 || proportional);
    if (match) return true;
    if (dim == 1) {
      if (auto v = minimal_violation(closed_form(params, tag, full_window), full_window)) {
        rep.witnesses.push_back({Witness::Kind::ViolatedTriple, conv, std::move(v), std::nullopt});
      }
    }
    if (rep.solver_dim > 0 && !proportional) {
      for (const auto& f : solution.projected_basis) {
        rep.witnesses.push_back({Witness::Kind::KernelOutsideSpan, conv, std::nullopt, f});
      }
    }
    return false;
  };
  rep.match_printed = check(Convention::Printed, rep.printed_tag, rep.printed_dim);
  rep.match_lemma = check(Convention::Lemma, rep.lemma_tag, rep.lemma_dim);
  return rep;
}

}  // namespace svinv
