#pragma once

// Degree-2 Lie and Leibniz cocycles on windows, coboundaries, core quotient
// dimensions and the symmetrization map into symmetric forms.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "svinv/constraint_system.hpp"
#include "svinv/forms.hpp"

namespace svinv {

/// Bilinear map on ordered pairs; no symmetry imposed.
class BilinearMap {
 public:
  using Entries = std::map<BasisPair, Rational>;

  explicit BilinearMap(AlgebraParams params) : params_(std::move(params)) {}

  Rational get(const BasisElement& a, const BasisElement& b) const;
  void set(const BasisElement& a, const BasisElement& b, Rational value);
  void add(const BasisElement& a, const BasisElement& b, const Rational& value);

  const AlgebraParams& params() const { return params_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const BilinearMap&, const BilinearMap&) = default;

 private:
  AlgebraParams params_;
  Entries entries_;
};

using LinearFunctional = std::map<BasisElement, Rational>;

enum class CocycleKind { Lie, Leibniz };

std::string to_string(CocycleKind k);

/// Leibniz kind: unknowns are all ordered in-window pairs. Lie kind: unknowns
/// are pairs a < b, with psi(b, a) = -psi(a, b) and psi(a, a) = 0. One row
/// per ordered triple with [x,y], [y,z], [x,z] all vanishing or in-window:
///   psi(x, [y,z]) - psi(y, [x,z]) - psi([x,y], z) = 0.
/// Throws WindowError when window.bound < 2.
ConstraintSystem assemble_cocycle_system(const AlgebraParams& params, const Window& window,
                                         CocycleKind kind);

struct CocycleSolution {
  CocycleKind kind = CocycleKind::Leibniz;
  Window window;
  std::size_t kernel_dimension = 0;
  /// Reduced basis of the kernel restricted to ordered core pairs (for the
  /// Lie kind only pairs a < b carry coordinates; see `core_maps`).
  std::vector<BilinearMap> core_basis;
  std::size_t core_dimension = 0;
};

/// Kernel of the cocycle system and its projection to the core.
/// `keep_kernel` additionally returns every kernel vector.
CocycleSolution solve_cocycles_core(const AlgebraParams& params, const Window& window,
                                    CocycleKind kind,
                                    std::vector<BilinearMap>* keep_kernel = nullptr);

/// psi_f(x, y) = f([x, y]) for every ordered pair of window basis elements.
/// f may be supported anywhere; brackets it never meets contribute nothing.
BilinearMap coboundary_map(const LinearFunctional& f, const AlgebraParams& params,
                           const Window& window);

/// xi(psi)(a, b) = psi(a, b) + psi(b, a).
BilinearForm xi_symmetrize(const BilinearMap& psi);

struct CocycleViolation {
  std::array<BasisElement, 3> triple;
  Rational residual;
};

/// psi(x,[y,z]) - psi(y,[x,z]) - psi([x,y],z) over every in-window triple
/// whose three brackets stay in the window; nonzero residuals only.
std::vector<CocycleViolation> cocycle_residuals(const BilinearMap& psi, const Window& window);

/// Extend-by-zero Virasoro cocycle omega(L_m, L_n) = delta_{m+n,0} (m^3 - m).
BilinearMap virasoro_cocycle(const AlgebraParams& params, const Window& window);

struct CohomologyDims {
  std::size_t cocycles_core = 0;
  std::size_t leibniz_cocycles_core = 0;
  std::size_t coboundaries_core = 0;
  std::size_t h2_core = 0;
  std::size_t hl2_core = 0;
  std::size_t xi_image_dim = 0;
  std::size_t inv_dim = 0;

  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// Residual audit of the printed representative that accompanies a printed
/// family, read one-sided (only the listed ordered pairs) and symmetrically.
struct ChiAudit {
  FamilyTag tag = FamilyTag::Zero;
  std::size_t one_sided_violations = 0;
  std::size_t symmetric_violations = 0;
  std::optional<CocycleViolation> one_sided_witness;
  std::optional<CocycleViolation> symmetric_witness;

  friend bool operator==(const ChiAudit&, const ChiAudit&) = default;
};

struct CohomologyReport {
  AlgebraParams params;
  Window window;
  CohomologyDims dims;
  CohomologyDims next_dims;  // same core, bound M+2
  bool stabilized = false;
  /// hl2_core - h2_core - xi_image_dim, measured.
  std::int64_t gap = 0;
  std::optional<ChiAudit> chi_audit;

  friend bool operator==(const CohomologyReport&, const CohomologyReport&) = default;
};

CohomologyDims cohomology_dims(const AlgebraParams& params, const Window& window);

ChiAudit audit_printed_chi(const AlgebraParams& params, const Window& window);

CohomologyReport cohomology_report(const AlgebraParams& params, const Window& window);

bool operator==(const CocycleViolation& a, const CocycleViolation& b);

}  // namespace svinv
