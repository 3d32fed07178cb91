#pragma once

// Exact model of the deformative Schrödinger-Virasoro algebra with basis
// {L_n, M_n, Y_{s+n} : n in Z}, parameters (lambda, mu) and sector s in {0, 1/2}.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "svinv/rational.hpp"

namespace svinv {

enum class Family : std::uint8_t { L = 0, Y = 1, M = 2 };

char family_letter(Family f);

/// Half-integer index stored as twice its value.
struct Mode {
  std::int64_t twice = 0;

  static constexpr Mode integer(std::int64_t n) { return Mode{2 * n}; }
  static constexpr Mode from_twice(std::int64_t t) { return Mode{t}; }
  /// Throws MalformedElementError unless 2*value is an integer.
  static Mode from_rational(const Rational& value);

  bool is_integer() const { return twice % 2 == 0; }
  Rational value() const { return Rational(twice, 2); }
  std::string str() const;

  constexpr Mode operator+(Mode o) const { return Mode{twice + o.twice}; }
  constexpr Mode operator-(Mode o) const { return Mode{twice - o.twice}; }
  constexpr Mode operator-() const { return Mode{-twice}; }
  friend constexpr auto operator<=>(const Mode&, const Mode&) = default;
};

/// Parameters (lambda, mu, s). Membership predicates are computed on demand.
struct AlgebraParams {
  Rational lambda;
  Rational mu;
  Mode s;

  /// Validates s in {0, 1/2}; throws DomainError otherwise.
  static AlgebraParams make(Rational lambda, Rational mu, Rational s);
  static AlgebraParams parse(std::string_view lambda, std::string_view mu, std::string_view s);

  bool mu_in_half_integers() const;  // 2mu in Z
  bool mu_in_s_shifted() const;      // mu - s in Z

  /// Mode of Y_{-mu}, present iff mu - s in Z.
  std::optional<Mode> neg_mu() const;
  /// Mode of M_{-2mu}, present iff 2mu in Z.
  std::optional<Mode> neg_two_mu() const;

  std::string str() const;
  friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;
};

struct BasisElement {
  Family family = Family::L;
  Mode mode;

  static constexpr BasisElement L(std::int64_t n) { return {Family::L, Mode::integer(n)}; }
  static constexpr BasisElement M(std::int64_t n) { return {Family::M, Mode::integer(n)}; }
  static constexpr BasisElement Y_twice(std::int64_t twice) { return {Family::Y, Mode::from_twice(twice)}; }

  /// Parity rule: L and M carry integer modes, Y carries modes in s + Z.
  bool valid_for(Mode s) const;
  /// Integer n with mode = n (L, M) or mode = s + n (Y).
  std::int64_t index(Mode s) const;

  /// "L(3)", "Y(-3/2)", ...
  std::string str() const;

  friend constexpr auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

void validate(const AlgebraParams& params, const BasisElement& b);

struct Term {
  Rational coef;
  BasisElement basis;
};

/// Finite linear combination with deterministic term order (L < Y < M, then
/// ascending mode). Zero coefficients are never stored.
class Element {
 public:
  using Terms = std::map<BasisElement, Rational>;

  Element() = default;
  explicit Element(const BasisElement& b, Rational coef = Rational(1));

  void add(const BasisElement& b, const Rational& coef);
  Element& operator+=(const Element& o);
  Element& operator*=(const Rational& k);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator*(const Rational& k, Element a) { return a *= k; }

  Rational coefficient(const BasisElement& b) const;
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  /// "(c)*B + (c)*B", or "0" for the zero element.
  std::string str() const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  Terms terms_;
};

/// Bracket of two basis elements. Inputs are assumed valid for params.s;
/// returns nullopt when the bracket vanishes.
std::optional<Term> bracket_basis(const AlgebraParams& params, const BasisElement& x,
                                  const BasisElement& y);

/// Bilinear bracket; validates every basis element of both inputs.
Element bracket(const AlgebraParams& params, const Element& x, const Element& y);

/// Eigenvalue of ad(L_0): m for L_m, p + mu for Y_p, m + 2mu for M_m.
Rational ad_weight(const AlgebraParams& params, const BasisElement& b);

/// Parses FAMILY "(" RATIONAL ")" and checks parity against params.s.
BasisElement parse_basis_element(std::string_view text, const AlgebraParams& params);

/// Truncation {L_n, M_n, Y_{s+n} : |n| <= bound} with a core |n| <= core.
struct Window {
  std::int64_t bound = 0;
  std::int64_t core = 0;

  /// Throws WindowError unless 0 <= core <= bound / 2.
  void validate() const;
  bool contains(Mode s, const BasisElement& b) const;
  bool in_core(Mode s, const BasisElement& b) const;
  std::size_t size() const { return static_cast<std::size_t>(3 * (2 * bound + 1)); }

  friend bool operator==(const Window&, const Window&) = default;
};

std::vector<BasisElement> enumerate_window(const AlgebraParams& params, const Window& window);

/// Window basis with constant-time lookup of an element's position.
class WindowBasis {
 public:
  WindowBasis(const AlgebraParams& params, std::int64_t bound);

  const std::vector<BasisElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const BasisElement& operator[](std::size_t i) const { return elements_[i]; }
  std::int64_t bound() const { return bound_; }
  /// Position in enumeration order, or nullopt when outside the window.
  std::optional<std::size_t> index_of(const BasisElement& b) const;

 private:
  Mode s_;
  std::int64_t bound_;
  std::vector<BasisElement> elements_;
};

}  // namespace svinv
