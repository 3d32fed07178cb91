#include "svinv/algebra.hpp"

#include <cstdlib>

#include "svinv/errors.hpp"

namespace svinv {

char family_letter(Family f) {
  switch (f) {
    case Family::L: return 'L';
    case Family::Y: return 'Y';
    case Family::M: return 'M';
  }
  return '?';
}

Mode Mode::from_rational(const Rational& value) {
  const Rational doubled = value * Rational(2);
  if (!doubled.is_integer()) {
    throw MalformedElementError("mode " + value.str() + " is not a half-integer");
  }
  return Mode{doubled.to_int64()};
}

std::string Mode::str() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

AlgebraParams AlgebraParams::make(Rational lambda, Rational mu, Rational s) {
  if (!(s == Rational(0) || s == Rational(1, 2))) {
    throw DomainError("sector s must be 0 or 1/2, got '" + s.str() + "'");
  }
  return AlgebraParams{std::move(lambda), std::move(mu), Mode::from_rational(s)};
}

AlgebraParams AlgebraParams::parse(std::string_view lambda, std::string_view mu,
                                   std::string_view s) {
  return make(Rational::parse(lambda), Rational::parse(mu), Rational::parse(s));
}

bool AlgebraParams::mu_in_half_integers() const { return (mu * Rational(2)).is_integer(); }

bool AlgebraParams::mu_in_s_shifted() const { return (mu - s.value()).is_integer(); }

std::optional<Mode> AlgebraParams::neg_mu() const {
  if (!mu_in_s_shifted()) return std::nullopt;
  return Mode::from_rational(-mu);
}

std::optional<Mode> AlgebraParams::neg_two_mu() const {
  if (!mu_in_half_integers()) return std::nullopt;
  return Mode::integer((-mu * Rational(2)).to_int64());
}

std::string AlgebraParams::str() const {
  return "(lambda=" + lambda.str() + ", mu=" + mu.str() + ", s=" + s.value().str() + ")";
}

bool BasisElement::valid_for(Mode s) const {
  const std::int64_t parity = (family == Family::Y) ? s.twice : 0;
  return ((mode.twice - parity) % 2) == 0;
}

std::int64_t BasisElement::index(Mode s) const {
  const std::int64_t shift = (family == Family::Y) ? s.twice : 0;
  return (mode.twice - shift) / 2;
}

std::string BasisElement::str() const {
  return std::string(1, family_letter(family)) + "(" + mode.str() + ")";
}

void validate(const AlgebraParams& params, const BasisElement& b) {
  if (!b.valid_for(params.s)) {
    throw MalformedElementError("basis element " + b.str() + " violates parity for s=" +
                                params.s.str());
  }
}

Element::Element(const BasisElement& b, Rational coef) { add(b, coef); }

void Element::add(const BasisElement& b, const Rational& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [b, c] : o.terms_) add(b, c);
  return *this;
}

Element& Element::operator*=(const Rational& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= k;
  return *this;
}

Rational Element::coefficient(const BasisElement& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")*" + b.str();
  }
  return out;
}

namespace {

// [L_n, Y_p] = (p - (lambda+1) n / 2 + mu) Y_{p+n}
Rational ly_coefficient(const AlgebraParams& params, std::int64_t n, Mode p) {
  return p.value() - (params.lambda + Rational(1)) * Rational(n, 2) + params.mu;
}

// [L_n, M_m] = (m - lambda n + 2 mu) M_{m+n}
Rational lm_coefficient(const AlgebraParams& params, std::int64_t n, std::int64_t m) {
  return Rational(m) - params.lambda * Rational(n) + Rational(2) * params.mu;
}

std::optional<Term> nonzero(Rational coef, BasisElement b) {
  if (coef.is_zero()) return std::nullopt;
  return Term{std::move(coef), b};
}

}  // namespace

std::optional<Term> bracket_basis(const AlgebraParams& params, const BasisElement& x,
                                  const BasisElement& y) {
  const Mode a = x.mode;
  const Mode b = y.mode;
  switch (x.family) {
    case Family::L: {
      const std::int64_t n = a.twice / 2;
      switch (y.family) {
        case Family::L:
          return nonzero(Rational(b.twice / 2 - n), {Family::L, a + b});
        case Family::Y:
          return nonzero(ly_coefficient(params, n, b), {Family::Y, a + b});
        case Family::M:
          return nonzero(lm_coefficient(params, n, b.twice / 2), {Family::M, a + b});
      }
      break;
    }
    case Family::Y:
      switch (y.family) {
        case Family::L:
          return nonzero(-ly_coefficient(params, b.twice / 2, a), {Family::Y, a + b});
        case Family::Y:
          // [Y_p, Y_q] = (q - p) M_{p+q}
          return nonzero(Rational(b.twice - a.twice, 2), {Family::M, a + b});
        case Family::M:
          return std::nullopt;
      }
      break;
    case Family::M:
      if (y.family == Family::L) {
        return nonzero(-lm_coefficient(params, b.twice / 2, a.twice / 2), {Family::M, a + b});
      }
      return std::nullopt;
  }
  return std::nullopt;
}

Element bracket(const AlgebraParams& params, const Element& x, const Element& y) {
  for (const auto& [b, c] : x.terms()) validate(params, b);
  for (const auto& [b, c] : y.terms()) validate(params, b);
  Element out;
  for (const auto& [bx, cx] : x.terms()) {
    for (const auto& [by, cy] : y.terms()) {
      if (auto t = bracket_basis(params, bx, by)) out.add(t->basis, cx * cy * t->coef);
    }
  }
  return out;
}

Rational ad_weight(const AlgebraParams& params, const BasisElement& b) {
  validate(params, b);
  switch (b.family) {
    case Family::L: return b.mode.value();
    case Family::Y: return b.mode.value() + params.mu;
    case Family::M: return b.mode.value() + Rational(2) * params.mu;
  }
  return Rational(0);
}

BasisElement parse_basis_element(std::string_view text, const AlgebraParams& params) {
  const std::string t(text);
  if (t.size() < 4 || t[1] != '(' || t.back() != ')') {
    throw ParseError("malformed basis element '" + t + "'");
  }
  Family family;
  switch (t[0]) {
    case 'L': family = Family::L; break;
    case 'Y': family = Family::Y; break;
    case 'M': family = Family::M; break;
    default: throw ParseError("unknown family in basis element '" + t + "'");
  }
  Rational value;
  try {
    value = Rational::parse(std::string_view(t).substr(2, t.size() - 3));
  } catch (const ParseError&) {
    throw ParseError("malformed mode in basis element '" + t + "'");
  }
  Mode mode;
  try {
    mode = Mode::from_rational(value);
  } catch (const MalformedElementError&) {
    throw MalformedElementError("parity violation in basis element '" + t + "'");
  }
  BasisElement b{family, mode};
  if (!b.valid_for(params.s)) {
    throw MalformedElementError("parity violation in basis element '" + t + "' for s=" +
                                params.s.str());
  }
  return b;
}

void Window::validate() const {
  if (bound < 0 || core < 0) throw WindowError("window bounds must be non-negative");
  if (core > bound / 2) {
    throw WindowError("core bound " + std::to_string(core) + " exceeds floor(M/2) for M=" +
                      std::to_string(bound));
  }
}

bool Window::contains(Mode s, const BasisElement& b) const {
  return std::llabs(b.index(s)) <= bound;
}

bool Window::in_core(Mode s, const BasisElement& b) const { return std::llabs(b.index(s)) <= core; }

std::vector<BasisElement> enumerate_window(const AlgebraParams& params, const Window& window) {
  window.validate();
  return WindowBasis(params, window.bound).elements();
}

WindowBasis::WindowBasis(const AlgebraParams& params, std::int64_t bound)
    : s_(params.s), bound_(bound) {
  elements_.reserve(static_cast<std::size_t>(3 * (2 * bound + 1)));
  for (Family f : {Family::L, Family::Y, Family::M}) {
    const std::int64_t shift = (f == Family::Y) ? s_.twice : 0;
    for (std::int64_t n = -bound; n <= bound; ++n) {
      elements_.push_back({f, Mode::from_twice(2 * n + shift)});
    }
  }
}

std::optional<std::size_t> WindowBasis::index_of(const BasisElement& b) const {
  const std::int64_t n = b.index(s_);
  if (std::llabs(n) > bound_) return std::nullopt;
  const auto width = static_cast<std::size_t>(2 * bound_ + 1);
  return static_cast<std::size_t>(b.family) * width + static_cast<std::size_t>(n + bound_);
}

}  // namespace svinv
