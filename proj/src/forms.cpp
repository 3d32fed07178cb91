#include "svinv/forms.hpp"

#include "svinv/bracket_table.hpp"
#include "svinv/errors.hpp"
#include "svinv/sparse_linalg.hpp"

namespace svinv {

Rational BilinearForm::get(const BasisElement& a, const BasisElement& b) const {
  auto it = entries_.find(key(a, b));
  return it == entries_.end() ? Rational(0) : it->second;
}

void BilinearForm::set(const BasisElement& a, const BasisElement& b, Rational value) {
  if (value.is_zero()) {
    entries_.erase(key(a, b));
  } else {
    entries_[key(a, b)] = std::move(value);
  }
}

void BilinearForm::add(const BasisElement& a, const BasisElement& b, const Rational& value) {
  set(a, b, get(a, b) + value);
}

Rational BilinearForm::evaluate(const Element& x, const Element& y) const {
  Rational out;
  for (const auto& [bx, cx] : x.terms()) {
    for (const auto& [by, cy] : y.terms()) {
      auto it = entries_.find(key(bx, by));
      if (it != entries_.end()) out += cx * cy * it->second;
    }
  }
  return out;
}

BilinearForm BilinearForm::restricted_to_core(const Window& window) const {
  BilinearForm out(params_);
  for (const auto& [k, v] : entries_) {
    if (window.in_core(params_.s, k.first) && window.in_core(params_.s, k.second)) {
      out.entries_.emplace(k, v);
    }
  }
  return out;
}

BilinearForm BilinearForm::scaled(const Rational& k) const {
  BilinearForm out(params_);
  if (k.is_zero()) return out;
  for (const auto& [key, v] : entries_) out.entries_.emplace(key, v * k);
  return out;
}

std::string to_string(Convention c) { return c == Convention::Printed ? "printed" : "lemma"; }

std::string to_string(FamilyTag t) {
  switch (t) {
    case FamilyTag::APrinted: return "A_printed";
    case FamilyTag::BPrinted: return "B_printed";
    case FamilyTag::C: return "C";
    case FamilyTag::D: return "D";
    case FamilyTag::EPrinted: return "E_printed";
    case FamilyTag::BLemma: return "B_lemma";
    case FamilyTag::DELemma: return "DE_lemma";
    case FamilyTag::Zero: return "Zero";
  }
  return "Zero";
}

Convention parse_convention(std::string_view text) {
  if (text == "printed") return Convention::Printed;
  if (text == "lemma") return Convention::Lemma;
  throw ParseError("unknown convention '" + std::string(text) + "'");
}

FamilyTag parse_family_tag(std::string_view text) {
  for (FamilyTag t : {FamilyTag::APrinted, FamilyTag::BPrinted, FamilyTag::C, FamilyTag::D,
                      FamilyTag::EPrinted, FamilyTag::BLemma, FamilyTag::DELemma, FamilyTag::Zero}) {
    if (to_string(t) == text) return t;
  }
  throw ParseError("unknown family tag '" + std::string(text) + "'");
}

FamilyTag classify_tag(const AlgebraParams& p, Convention convention) {
  const bool half = p.mu_in_half_integers();
  const bool shifted = p.mu_in_s_shifted();
  const Rational& l = p.lambda;
  if (convention == Convention::Printed) {
    if (l == Rational(-1) && half) return FamilyTag::APrinted;
    if (l == Rational(-3) && shifted) return FamilyTag::BPrinted;
    if (l == Rational(-5) && shifted) return FamilyTag::C;
    if (l == Rational(-2) && shifted) return FamilyTag::D;
    // The fifth printed case reads as 1/2 Z minus (s + Z).
    if (l == Rational(-2) && half) return FamilyTag::EPrinted;
    return FamilyTag::Zero;
  }
  if (l == Rational(-5) && shifted) return FamilyTag::C;
  if (l == Rational(-3) && shifted) return FamilyTag::BLemma;
  if (l == Rational(-2) && half) return FamilyTag::DELemma;
  return FamilyTag::Zero;
}

ClassificationResult classify(const AlgebraParams& params, Convention convention,
                              const Window& window) {
  ClassificationResult r;
  r.convention = convention;
  r.tag = classify_tag(params, convention);
  if (r.tag != FamilyTag::Zero) {
    r.dimension = 1;
    r.generator = closed_form(params, r.tag, window);
  }
  return r;
}

bool tag_compatible(const AlgebraParams& params, FamilyTag tag) {
  if (tag == FamilyTag::Zero) return true;
  return classify_tag(params, Convention::Printed) == tag ||
         classify_tag(params, Convention::Lemma) == tag;
}

BilinearForm closed_form(const AlgebraParams& params, FamilyTag tag, const Window& window) {
  window.validate();
  if (!tag_compatible(params, tag)) {
    throw DomainError("family " + to_string(tag) + " does not apply to " + params.str());
  }
  BilinearForm form(params);
  if (tag == FamilyTag::Zero) return form;

  const Mode s = params.s;
  auto in_window = [&](const BasisElement& b) { return window.contains(s, b); };
  const auto bound = window.bound;

  // phi(L_n, M_{-n-2mu}) = 1, for all n or only n = 0.
  auto put_lm = [&](bool all_n) {
    const Mode m0 = *params.neg_two_mu();
    for (std::int64_t n = -bound; n <= bound; ++n) {
      if (!all_n && n != 0) continue;
      const BasisElement l = BasisElement::L(n);
      const BasisElement m{Family::M, m0 - Mode::integer(n)};
      if (in_window(m)) form.set(l, m, Rational(1));
    }
  };
  // phi(Y_p, Y_{-p-2mu}) = -2, skipping p = -mu when `skip_fixed` is set.
  auto put_yy = [&](bool skip_fixed) {
    const Mode m0 = *params.neg_two_mu();
    for (std::int64_t n = -bound; n <= bound; ++n) {
      const BasisElement y{Family::Y, Mode::from_twice(2 * n + s.twice)};
      const BasisElement partner{Family::Y, m0 - y.mode};
      if (!in_window(partner)) continue;
      if (skip_fixed && partner == y) continue;
      form.set(y, partner, Rational(-2));
    }
  };

  switch (tag) {
    case FamilyTag::APrinted:
      put_lm(false);
      put_yy(true);
      break;
    case FamilyTag::BPrinted:
      put_lm(false);
      break;
    case FamilyTag::C: {
      const Mode neg_mu = *params.neg_mu();
      for (std::int64_t n = -bound; n <= bound; ++n) {
        const BasisElement y{Family::Y, neg_mu - Mode::integer(n)};
        if (in_window(y)) form.set(BasisElement::L(n), y, Rational(1));
      }
      break;
    }
    case FamilyTag::D:
    case FamilyTag::DELemma:
      put_lm(true);
      put_yy(false);
      break;
    case FamilyTag::EPrinted:
      put_lm(true);
      break;
    case FamilyTag::BLemma: {
      const BasisElement y{Family::Y, *params.neg_mu()};
      if (in_window(y)) form.set(y, y, Rational(1));
      break;
    }
    case FamilyTag::Zero:
      break;
  }
  return form;
}

namespace {

std::vector<Rational> dense_gram(const BilinearForm& form, const WindowBasis& basis) {
  const std::size_t n = basis.size();
  std::vector<Rational> gram(n * n);
  for (const auto& [k, v] : form.entries()) {
    auto i = basis.index_of(k.first);
    auto j = basis.index_of(k.second);
    if (!i || !j) continue;
    gram[*i * n + *j] = v;
    gram[*j * n + *i] = v;
  }
  return gram;
}

}  // namespace

std::vector<Violation> invariance_violations(const BilinearForm& form, const Window& window) {
  window.validate();
  const AlgebraParams& params = form.params();
  const WindowBasis basis(params, window.bound);
  const BracketTable table(params, basis);
  const std::size_t n = basis.size();
  const std::vector<Rational> gram = dense_gram(form, basis);
  using State = BracketTable::Entry::State;

  std::vector<Violation> out;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto& xy = table(x, y);
      if (xy.state == State::OutOfWindow) continue;
      for (std::size_t z = 0; z < n; ++z) {
        const auto& yz = table(y, z);
        if (yz.state == State::OutOfWindow) continue;
        Rational r;
        if (xy.state == State::InWindow) {
          const Rational& g = gram[xy.target * n + z];
          if (!g.is_zero()) r += xy.coef * g;
        }
        if (yz.state == State::InWindow) {
          const Rational& g = gram[x * n + yz.target];
          if (!g.is_zero()) r -= yz.coef * g;
        }
        if (!r.is_zero()) out.push_back({{basis[x], basis[y], basis[z]}, std::move(r)});
      }
    }
  }
  return out;
}

Rational invariance_residual(const BilinearForm& form, const BasisElement& x,
                             const BasisElement& y, const BasisElement& z) {
  const AlgebraParams& p = form.params();
  Rational r;
  if (auto t = bracket_basis(p, x, y)) r += t->coef * form.get(t->basis, z);
  if (auto t = bracket_basis(p, y, z)) r -= t->coef * form.get(x, t->basis);
  return r;
}

std::vector<Element> radical_basis(const BilinearForm& form, const Window& window) {
  window.validate();
  const WindowBasis basis(form.params(), window.bound);
  for (const auto& [k, v] : form.entries()) {
    if (!basis.index_of(k.first) || !basis.index_of(k.second)) {
      throw DomainError("form entry (" + k.first.str() + ", " + k.second.str() +
                        ") lies outside the window");
    }
  }
  const std::size_t n = basis.size();
  const std::vector<Rational> gram = dense_gram(form, basis);
  SparseMatrix m(0, n);
  for (std::size_t i = 0; i < n; ++i) {
    SparseRow row;
    for (std::size_t j = 0; j < n; ++j) {
      if (!gram[i * n + j].is_zero()) row.emplace_back(j, gram[i * n + j]);
    }
    m.add_row(std::move(row));
  }
  std::vector<Element> out;
  for (const auto& v : nullspace_sparse(m)) {
    Element e;
    for (const auto& [c, x] : v) e.add(basis[c], x);
    out.push_back(std::move(e));
  }
  return out;
}

std::optional<Rational> proportionality(const BilinearForm& a, const BilinearForm& b) {
  if (b.is_zero() || a.entries().size() != b.entries().size()) return std::nullopt;
  std::optional<Rational> k;
  auto ia = a.entries().begin();
  for (auto ib = b.entries().begin(); ib != b.entries().end(); ++ib, ++ia) {
    if (ia->first != ib->first) return std::nullopt;
    const Rational ratio = ia->second / ib->second;
    if (!k) {
      k = ratio;
    } else if (*k != ratio) {
      return std::nullopt;
    }
  }
  return k;
}

}  // namespace svinv
