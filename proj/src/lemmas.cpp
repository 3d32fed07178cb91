#include <cstdlib>
#include <functional>

#include "svinv/errors.hpp"
#include "svinv/inv_solver.hpp"

namespace svinv {

namespace {

class Checker {
 public:
  template <class Describe>
  void expect(const Rational& lhs, const Rational& rhs, Describe&& describe) {
    ++instances;
    if (passed && lhs != rhs) {
      passed = false;
      witness = describe() + ": " + lhs.str() + " != " + rhs.str();
    }
  }

  std::size_t instances = 0;
  bool passed = true;
  std::string witness;
};

// Core-restricted view of one kernel form.
class CoreView {
 public:
  CoreView(const BilinearForm& form, std::int64_t core) : form_(form), core_(core) {
    const Mode s = form.params().s;
    for (std::int64_t n = -core; n <= core; ++n) {
      ls_.push_back(BasisElement::L(n));
      ys_.push_back({Family::Y, Mode::from_twice(2 * n + s.twice)});
      ms_.push_back(BasisElement::M(n));
    }
  }

  bool in_core(const BasisElement& b) const {
    return std::llabs(b.index(form_.params().s)) <= core_;
  }
  /// phi(a, b), or nullopt when either element lies outside the core.
  std::optional<Rational> phi(const BasisElement& a, const BasisElement& b) const {
    if (!in_core(a) || !in_core(b)) return std::nullopt;
    return form_.get(a, b);
  }
  Rational at(const BasisElement& a, const BasisElement& b) const { return form_.get(a, b); }

  const std::vector<BasisElement>& Ls() const { return ls_; }
  const std::vector<BasisElement>& Ys() const { return ys_; }
  const std::vector<BasisElement>& Ms() const { return ms_; }
  const AlgebraParams& params() const { return form_.params(); }

 private:
  const BilinearForm& form_;
  std::int64_t core_;
  std::vector<BasisElement> ls_, ys_, ms_;
};

std::string pair_str(const BasisElement& a, const BasisElement& b) {
  return "phi(" + a.str() + ", " + b.str() + ")";
}

struct LemmaSpec {
  std::string name;
  bool applicable;
  std::function<void(const CoreView&, Checker&)> check;
};

void all_zero(const CoreView& v, Checker& chk, const std::vector<BasisElement>& as,
              const std::vector<BasisElement>& bs,
              const std::function<bool(const BasisElement&, const BasisElement&)>& when) {
  for (const auto& a : as) {
    for (const auto& b : bs) {
      if (!when(a, b)) continue;
      chk.expect(v.at(a, b), Rational(0), [&] { return pair_str(a, b); });
    }
  }
}

std::vector<LemmaSpec> lemma_table(const AlgebraParams& p) {
  const bool half = p.mu_in_half_integers();
  const bool shifted = p.mu_in_s_shifted();
  const Rational& lambda = p.lambda;
  const std::optional<Mode> neg_mu = p.neg_mu();
  const std::optional<Mode> neg_two_mu = p.neg_two_mu();
  auto any = [](const BasisElement&, const BasisElement&) { return true; };
  auto is_neg_mu = [neg_mu](Mode m) { return neg_mu && m == *neg_mu; };
  const BasisElement l0 = BasisElement::L(0);

  // phi(L_0, M_{-2mu}) and phi(L_0, Y_{-mu}), when the partner is in the core.
  auto lm_anchor = [=](const CoreView& v) -> std::optional<Rational> {
    if (!neg_two_mu) return std::nullopt;
    return v.phi(l0, {Family::M, *neg_two_mu});
  };
  auto ly_anchor = [=](const CoreView& v) -> std::optional<Rational> {
    if (!neg_mu) return std::nullopt;
    return v.phi(l0, {Family::Y, *neg_mu});
  };

  std::vector<LemmaSpec> t;
  t.push_back({"LL", true, [=](const CoreView& v, Checker& c) { all_zero(v, c, v.Ls(), v.Ls(), any); }});
  t.push_back({"LY-01", !shifted,
               [=](const CoreView& v, Checker& c) { all_zero(v, c, v.Ls(), v.Ys(), any); }});
  t.push_back({"LY-02", shifted, [=](const CoreView& v, Checker& c) {
                 all_zero(v, c, v.Ls(), v.Ys(), [&](const BasisElement& l, const BasisElement& y) {
                   return !is_neg_mu(y.mode) && !is_neg_mu(l.mode + y.mode);
                 });
               }});
  t.push_back({"LY-03", shifted, [=](const CoreView& v, Checker& c) {
                 all_zero(v, c, v.Ls(), v.Ys(), [&](const BasisElement& l, const BasisElement& y) {
                   return l.mode.twice != 0 && is_neg_mu(y.mode);
                 });
               }});
  t.push_back({"LY-04", shifted, [=](const CoreView& v, Checker& c) {
                 const auto anchor = ly_anchor(v);
                 const Rational k = -(lambda + Rational(3)) / Rational(2);
                 for (const auto& l : v.Ls()) {
                   for (const auto& y : v.Ys()) {
                     const auto d = [&] { return pair_str(l, y); };
                     if (l.mode.twice != 0) {
                       if (is_neg_mu(l.mode + y.mode)) {
                         if (anchor) c.expect(v.at(l, y), k * *anchor, d);
                       } else {
                         c.expect(v.at(l, y), Rational(0), d);
                       }
                     } else if (!is_neg_mu(y.mode)) {
                       c.expect(v.at(l, y), Rational(0), d);
                     }
                   }
                 }
               }});
  t.push_back({"LY-05", shifted, [=](const CoreView& v, Checker& c) {
                 const auto anchor = ly_anchor(v);
                 for (const auto& l : v.Ls()) {
                   for (const auto& y : v.Ys()) {
                     const auto d = [&] { return pair_str(l, y); };
                     if (lambda == Rational(-5)) {
                       if (is_neg_mu(l.mode + y.mode)) {
                         if (anchor) c.expect(v.at(l, y), *anchor, d);
                       } else {
                         c.expect(v.at(l, y), Rational(0), d);
                       }
                     } else if (lambda != Rational(-3)) {
                       c.expect(v.at(l, y), Rational(0), d);
                     } else if (!(l.mode.twice == 0 && is_neg_mu(y.mode))) {
                       c.expect(v.at(l, y), Rational(0), d);
                     }
                   }
                 }
               }});
  t.push_back({"LM-01", !half,
               [=](const CoreView& v, Checker& c) { all_zero(v, c, v.Ls(), v.Ms(), any); }});
  t.push_back({"LM-02", half, [=](const CoreView& v, Checker& c) {
                 const auto anchor = lm_anchor(v);
                 const Rational k = -(lambda + Rational(1));
                 for (const auto& l : v.Ls()) {
                   for (const auto& m : v.Ms()) {
                     const auto d = [&] { return pair_str(l, m); };
                     if (l.mode.twice != 0) {
                       if (l.mode + m.mode == *neg_two_mu) {
                         if (anchor) c.expect(v.at(l, m), k * *anchor, d);
                       } else {
                         c.expect(v.at(l, m), Rational(0), d);
                       }
                     } else if (m.mode != *neg_two_mu) {
                       c.expect(v.at(l, m), Rational(0), d);
                     }
                   }
                 }
               }});
  t.push_back({"LM-03", half, [=](const CoreView& v, Checker& c) {
                 const auto anchor = lm_anchor(v);
                 for (const auto& l : v.Ls()) {
                   for (const auto& m : v.Ms()) {
                     const auto d = [&] { return pair_str(l, m); };
                     const bool on_line = l.mode + m.mode == *neg_two_mu;
                     if (lambda == Rational(-2)) {
                       if (on_line) {
                         if (anchor) c.expect(v.at(l, m), *anchor, d);
                       } else {
                         c.expect(v.at(l, m), Rational(0), d);
                       }
                     } else if (lambda != Rational(-1)) {
                       c.expect(v.at(l, m), Rational(0), d);
                     } else if (!(l.mode.twice == 0 && m.mode == *neg_two_mu)) {
                       c.expect(v.at(l, m), Rational(0), d);
                     }
                   }
                 }
               }});
  t.push_back({"YM-01", true,
               [=](const CoreView& v, Checker& c) { all_zero(v, c, v.Ys(), v.Ms(), any); }});
  t.push_back({"MM-01", true,
               [=](const CoreView& v, Checker& c) { all_zero(v, c, v.Ms(), v.Ms(), any); }});
  t.push_back({"YY-01", !half,
               [=](const CoreView& v, Checker& c) { all_zero(v, c, v.Ys(), v.Ys(), any); }});
  t.push_back({"YY-02", half, [=](const CoreView& v, Checker& c) {
                 all_zero(v, c, v.Ys(), v.Ys(), [&](const BasisElement& a, const BasisElement& b) {
                   return !is_neg_mu(a.mode) && a.mode + b.mode != *neg_two_mu;
                 });
               }});
  t.push_back({"YY-03", shifted, [=](const CoreView& v, Checker& c) {
                 all_zero(v, c, v.Ys(), v.Ys(), [&](const BasisElement& a, const BasisElement& b) {
                   return is_neg_mu(a.mode) && !is_neg_mu(b.mode);
                 });
               }});
  t.push_back({"YY-04", half, [=](const CoreView& v, Checker& c) {
                 all_zero(v, c, v.Ys(), v.Ys(), [&](const BasisElement& a, const BasisElement& b) {
                   return a.mode + b.mode != *neg_two_mu;
                 });
               }});
  t.push_back({"YY-05", half, [=](const CoreView& v, Checker& c) {
                 const auto anchor = lm_anchor(v);
                 if (!anchor) return;
                 for (const auto& y : v.Ys()) {
                   if (is_neg_mu(y.mode)) continue;
                   const BasisElement partner{Family::Y, *neg_two_mu - y.mode};
                   if (auto val = v.phi(y, partner)) {
                     c.expect(*val, Rational(-2) * *anchor, [&] { return pair_str(y, partner); });
                   }
                 }
                 if (lambda != Rational(-3) && neg_mu) {
                   const BasisElement y{Family::Y, *neg_mu};
                   if (auto val = v.phi(y, y)) {
                     const Rational k = Rational(2) * (lambda + Rational(1)) / (lambda + Rational(3));
                     c.expect(*val, k * *anchor, [&] { return pair_str(y, y); });
                   }
                 }
               }});
  t.push_back({"YY-06", half, [=](const CoreView& v, Checker& c) {
                 const auto anchor = lm_anchor(v);
                 for (const auto& a : v.Ys()) {
                   for (const auto& b : v.Ys()) {
                     const auto d = [&] { return pair_str(a, b); };
                     const bool on_line = a.mode + b.mode == *neg_two_mu;
                     if (lambda == Rational(-2) || lambda == Rational(-1)) {
                       if (!on_line) {
                         c.expect(v.at(a, b), Rational(0), d);
                       } else if (anchor) {
                         const bool fixed = is_neg_mu(a.mode);
                         const Rational k = (lambda == Rational(-1) && fixed) ? Rational(0) : Rational(-2);
                         c.expect(v.at(a, b), k * *anchor, d);
                       }
                     } else if (lambda != Rational(-3)) {
                       c.expect(v.at(a, b), Rational(0), d);
                     } else if (!(is_neg_mu(a.mode) && is_neg_mu(b.mode))) {
                       c.expect(v.at(a, b), Rational(0), d);
                     }
                   }
                 }
               }});
  return t;
}

}  // namespace

std::vector<LemmaVerdict> lemma_suite(const AlgebraParams& params, const InvSolution& solution) {
  if (!solution.stabilized) {
    throw UnstabilizedError("lemma suite needs a stabilized solution; enlarge the window bound M");
  }
  std::vector<LemmaVerdict> out;
  for (const auto& entry : lemma_table(params)) {
    LemmaVerdict verdict;
    verdict.lemma = entry.name;
    verdict.applicable = entry.applicable;
    if (!entry.applicable) {
      out.push_back(std::move(verdict));
      continue;
    }
    verdict.vacuous = solution.projected_basis.empty();
    Checker chk;
    for (const auto& form : solution.projected_basis) {
      entry.check(CoreView(form, solution.window.core), chk);
    }
    verdict.instances = chk.instances;
    verdict.passed = chk.passed;
    verdict.witness = chk.witness;
    out.push_back(std::move(verdict));
  }
  return out;
}

}  // namespace svinv
