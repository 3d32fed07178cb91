#pragma once

// Brute-force reconstruction of the invariant symmetric forms on a window:
// assemble phi([x,y],z) = phi(x,[y,z]) over all in-window triples, take the
// exact kernel and project it to the core where every constraint is present.

#include <optional>
#include <string>
#include <vector>

#include "svinv/constraint_system.hpp"
#include "svinv/forms.hpp"

namespace svinv {

/// Unknowns are unordered in-window pairs (only ad-weight-zero pairs when
/// `weight_filter`). Rows referencing an out-of-window bracket are dropped.
/// Throws WindowError when window.bound < 2.
ConstraintSystem assemble_invariance_system(const AlgebraParams& params, const Window& window,
                                            bool weight_filter);

/// Kernel of one truncated system together with its core projection.
struct TruncatedKernel {
  std::vector<BilinearForm> kernel;
  /// Reduced-echelon basis of the kernel restricted to core pairs.
  std::vector<BilinearForm> projected_basis;
};

TruncatedKernel solve_truncated(const AlgebraParams& params, const Window& window,
                                bool weight_filter = true);

struct InvSolution {
  AlgebraParams params;
  Window window;
  bool weight_filter = true;
  std::vector<BilinearForm> kernel;
  std::vector<BilinearForm> projected_basis;
  std::size_t projected_dimension = 0;
  /// Projected dimension of the re-solve at bound M+2 with the same core.
  std::size_t next_projected_dimension = 0;
  bool stabilized = false;
};

InvSolution solve_invariant_forms(const AlgebraParams& params, const Window& window,
                                  bool weight_filter = true);

struct Witness {
  enum class Kind { ViolatedTriple, KernelOutsideSpan };
  Kind kind = Kind::ViolatedTriple;
  Convention convention = Convention::Printed;
  std::optional<Violation> violation;   // ViolatedTriple
  std::optional<BilinearForm> form;     // KernelOutsideSpan

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct DiscrepancyReport {
  AlgebraParams params;
  Window window;
  bool stabilized = false;
  std::size_t solver_dim = 0;
  int printed_dim = 0;
  int lemma_dim = 0;
  FamilyTag printed_tag = FamilyTag::Zero;
  FamilyTag lemma_tag = FamilyTag::Zero;
  /// Projected solver generator, normalized to a unit leading entry, when
  /// solver_dim == 1.
  std::optional<BilinearForm> generator;
  bool match_printed = false;
  bool match_lemma = false;
  std::vector<Witness> witnesses;

  friend bool operator==(const DiscrepancyReport&, const DiscrepancyReport&) = default;
};

/// Compares the solver against both conventions. Throws UnstabilizedError
/// when the solution did not stabilize.
DiscrepancyReport compare_with_classification(const InvSolution& solution,
                                              const AlgebraParams& params);

/// First violation of `form`, preferring the triple (L_1, L_{-1}, M_{-2mu}).
std::optional<Violation> minimal_violation(const BilinearForm& form, const Window& window);

struct LemmaVerdict {
  std::string lemma;
  bool applicable = false;
  bool vacuous = false;
  bool passed = true;
  std::size_t instances = 0;
  std::string witness;  // first failing instance
};

/// Replays every lemma identity applicable to params on each projected
/// kernel form, over all core index instances. Throws UnstabilizedError
/// for an unstabilized solution.
std::vector<LemmaVerdict> lemma_suite(const AlgebraParams& params, const InvSolution& solution);

}  // namespace svinv
