#pragma once

// Symmetric bilinear forms on window bases: closed forms of the invariant
// families, invariance residuals, radicals and the two classifiers.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "svinv/algebra.hpp"
#include "svinv/constraint_system.hpp"

namespace svinv {

/// Symmetric form stored on unordered pairs (key.first <= key.second).
class BilinearForm {
 public:
  using Entries = std::map<BasisPair, Rational>;

  explicit BilinearForm(AlgebraParams params) : params_(std::move(params)) {}

  static BasisPair key(const BasisElement& a, const BasisElement& b) {
    return a <= b ? BasisPair{a, b} : BasisPair{b, a};
  }

  Rational get(const BasisElement& a, const BasisElement& b) const;
  /// Setting zero removes the entry.
  void set(const BasisElement& a, const BasisElement& b, Rational value);
  void add(const BasisElement& a, const BasisElement& b, const Rational& value);

  /// Bilinear extension to linear combinations.
  Rational evaluate(const Element& x, const Element& y) const;

  const AlgebraParams& params() const { return params_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  /// Entries with both elements in the core of `window`.
  BilinearForm restricted_to_core(const Window& window) const;
  BilinearForm scaled(const Rational& k) const;

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

 private:
  AlgebraParams params_;
  Entries entries_;
};

enum class Convention { Printed, Lemma };

enum class FamilyTag { APrinted, BPrinted, C, D, EPrinted, BLemma, DELemma, Zero };

std::string to_string(Convention c);
std::string to_string(FamilyTag t);
Convention parse_convention(std::string_view text);
FamilyTag parse_family_tag(std::string_view text);

struct ClassificationResult {
  Convention convention = Convention::Lemma;
  FamilyTag tag = FamilyTag::Zero;
  int dimension = 0;
  std::optional<BilinearForm> generator;  // restricted to the requested window
};

/// Tag that `convention` assigns to params.
FamilyTag classify_tag(const AlgebraParams& params, Convention convention);

ClassificationResult classify(const AlgebraParams& params, Convention convention,
                              const Window& window = Window{8, 4});

/// Whether `tag` is the tag some convention assigns to params (Zero is
/// compatible with everything).
bool tag_compatible(const AlgebraParams& params, FamilyTag tag);

/// Window restriction of a family's generator; pairs whose partner leaves
/// the window are omitted. Throws DomainError when the tag does not fit params.
BilinearForm closed_form(const AlgebraParams& params, FamilyTag tag, const Window& window);

struct Violation {
  std::array<BasisElement, 3> triple;
  Rational residual;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// phi([x,y],z) - phi(x,[y,z]) for every ordered window triple with x, y, z,
/// [x,y], [y,z] inside the window; only nonzero residuals, in triple order.
std::vector<Violation> invariance_violations(const BilinearForm& form, const Window& window);

/// Residual of one triple without window restrictions.
Rational invariance_residual(const BilinearForm& form, const BasisElement& x,
                             const BasisElement& y, const BasisElement& z);

/// Basis of {v : phi(v, b) = 0 for every window basis b}.
std::vector<Element> radical_basis(const BilinearForm& form, const Window& window);

/// Exact proportionality: returns k with a == k * b when both have the same
/// support (and b is nonzero), nullopt otherwise.
std::optional<Rational> proportionality(const BilinearForm& a, const BilinearForm& b);

}  // namespace svinv
