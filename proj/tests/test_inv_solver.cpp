#include <gtest/gtest.h>

#include <algorithm>

#include "oracle.hpp"
#include "svinv/errors.hpp"
#include "svinv/inv_solver.hpp"

using namespace svinv;

namespace {

AlgebraParams P(const char* l, const char* m, const char* s) { return AlgebraParams::parse(l, m, s); }

BasisElement Yi(std::int64_t n) { return BasisElement::Y_twice(2 * n); }

/// Coordinates of forms over the unordered core pairs of a window.
oracle::Dense coordinates(const std::vector<BilinearForm>& forms, const AlgebraParams& p,
                          std::int64_t core) {
  const auto basis = enumerate_window(p, Window{core, 0});
  oracle::Dense out;
  for (const auto& f : forms) {
    out.emplace_back();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i; j < basis.size(); ++j) out.back().push_back(f.get(basis[i], basis[j]).raw());
  }
  return out;
}

const LemmaVerdict& find(const std::vector<LemmaVerdict>& vs, const std::string& name) {
  auto it = std::find_if(vs.begin(), vs.end(), [&](const LemmaVerdict& v) { return v.lemma == name; });
  if (it == vs.end()) throw std::runtime_error("missing lemma " + name);
  return *it;
}

}  // namespace

TEST(Assemble, UnknownsAreWeightZeroPairs) {
  const auto p = P("-2", "0", "0");
  const auto sys = assemble_invariance_system(p, Window{2, 1}, true);
  const auto basis = enumerate_window(p, Window{2, 1});
  std::size_t expected = 0;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      if ((ad_weight(p, basis[i]) + ad_weight(p, basis[j])).is_zero()) ++expected;
  EXPECT_EQ(sys.unknowns.size(), expected);
  EXPECT_EQ(sys.matrix.n_cols(), expected);
  EXPECT_TRUE(sys.column_of({BasisElement::L(1), BasisElement::M(-1)}).has_value());
  EXPECT_TRUE(sys.column_of({Yi(0), Yi(0)}).has_value());
  EXPECT_FALSE(sys.column_of({BasisElement::L(1), BasisElement::M(1)}).has_value());

  const auto all = assemble_invariance_system(p, Window{2, 1}, false);
  EXPECT_EQ(all.unknowns.size(), basis.size() * (basis.size() + 1) / 2);
}

TEST(Assemble, RowForLLMTriple) {
  const auto p = P("-2", "0", "0");
  const auto sys = assemble_invariance_system(p, Window{2, 1}, true);
  const auto a = *sys.column_of({BasisElement::L(1), BasisElement::M(-1)});
  const auto b = *sys.column_of({BasisElement::L(0), BasisElement::M(0)});
  SparseRow want{{a, Rational(1)}, {b, Rational(-1)}};
  canonicalize(want);
  SparseRow neg = axpy(SparseRow{}, Rational(-1), want);
  bool found = false;
  for (const auto& row : sys.matrix.rows()) found |= row == want || row == neg;
  EXPECT_TRUE(found);
}

TEST(Assemble, NoStoredZerosAndDeterministic) {
  const auto p = P("-3", "1/2", "1/2");
  const auto a = assemble_invariance_system(p, Window{3, 1}, true);
  const auto b = assemble_invariance_system(p, Window{3, 1}, true);
  EXPECT_EQ(a.matrix, b.matrix);
  EXPECT_EQ(a.unknowns, b.unknowns);
  for (const auto& row : a.matrix.rows()) {
    EXPECT_FALSE(row.empty());
    for (const auto& [c, v] : row) EXPECT_FALSE(v.is_zero());
  }
}

TEST(Assemble, RejectsSmallWindow) {
  EXPECT_THROW(assemble_invariance_system(P("0", "0", "0"), Window{1, 0}, true), WindowError);
  EXPECT_THROW(solve_invariant_forms(P("0", "0", "0"), Window{8, 5}), WindowError);
}

TEST(Solve, Examples) {
  const auto d = solve_invariant_forms(P("-2", "0", "0"), Window{8, 4});
  EXPECT_TRUE(d.stabilized);
  ASSERT_EQ(d.projected_dimension, 1u);
  const auto cf = closed_form(P("-2", "0", "0"), FamilyTag::D, Window{4, 0});
  EXPECT_TRUE(proportionality(d.projected_basis[0], cf).has_value());

  const auto z = solve_invariant_forms(P("0", "0", "0"), Window{8, 4});
  EXPECT_TRUE(z.stabilized);
  EXPECT_EQ(z.projected_dimension, 0u);

  const auto a = solve_invariant_forms(P("-1", "1/2", "0"), Window{8, 4});
  EXPECT_TRUE(a.stabilized);
  EXPECT_EQ(a.projected_dimension, 0u);
}

TEST(Solve, KernelIsSound) {
  for (const auto& p : {P("-2", "1/2", "0"), P("-3", "0", "0"), P("-5", "1/2", "1/2"), P("1", "-1", "0")}) {
    const Window w{6, 3};
    const auto t = solve_truncated(p, w);
    for (const auto& f : t.kernel) EXPECT_TRUE(invariance_violations(f, w).empty()) << p.str();
  }
}

TEST(Solve, MonotonicTruncation) {
  for (const auto& p : {P("-2", "0", "0"), P("-3", "1", "0"), P("-1", "0", "0"), P("0", "1/3", "1/2")}) {
    for (std::int64_t m : {2, 4, 6}) {
      const auto small = solve_truncated(p, Window{m, 1});
      const auto large = solve_truncated(p, Window{m + 2, 1});
      auto stacked = coordinates(small.projected_basis, p, 1);
      const std::size_t r = oracle::dense_rank(stacked);
      EXPECT_EQ(r, small.projected_basis.size());
      for (auto& row : coordinates(large.projected_basis, p, 1)) stacked.push_back(row);
      EXPECT_EQ(oracle::dense_rank(stacked), r) << p.str() << " M=" << m;
    }
  }
}

TEST(Solve, WeightFilterEquivalence) {
  for (const auto& p : {P("-2", "0", "0"), P("-1", "0", "0"), P("0", "1/3", "0")}) {
    for (std::int64_t m : {4, 6}) {
      const Window w{m, m / 2};
      EXPECT_EQ(solve_truncated(p, w, true).projected_basis, solve_truncated(p, w, false).projected_basis)
          << p.str() << " M=" << m;
    }
  }
}

TEST(Compare, AgreementAtMinusFive) {
  const auto p = P("-5", "1/2", "1/2");
  const auto rep = compare_with_classification(solve_invariant_forms(p, Window{8, 4}), p);
  EXPECT_EQ(rep.solver_dim, 1u);
  EXPECT_EQ(rep.printed_dim, 1);
  EXPECT_EQ(rep.lemma_dim, 1);
  EXPECT_TRUE(rep.match_printed);
  EXPECT_TRUE(rep.match_lemma);
  EXPECT_TRUE(rep.witnesses.empty());
  ASSERT_TRUE(rep.generator.has_value());
  const auto k = proportionality(*rep.generator, closed_form(p, FamilyTag::C, Window{4, 0}));
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(rep.generator->get(BasisElement::L(1), BasisElement::Y_twice(-3)), *k);
}

TEST(Compare, LambdaMinusOneWitness) {
  const auto p = P("-1", "0", "0");
  const auto rep = compare_with_classification(solve_invariant_forms(p, Window{8, 4}), p);
  EXPECT_EQ(rep.solver_dim, 0u);
  EXPECT_EQ(rep.printed_dim, 1);
  EXPECT_FALSE(rep.match_printed);
  EXPECT_TRUE(rep.match_lemma);
  ASSERT_FALSE(rep.witnesses.empty());
  const auto& w = rep.witnesses.front();
  EXPECT_EQ(w.kind, Witness::Kind::ViolatedTriple);
  ASSERT_TRUE(w.violation.has_value());
  EXPECT_EQ(w.violation->triple,
            (std::array<BasisElement, 3>{BasisElement::L(1), BasisElement::L(-1), BasisElement::M(0)}));
  EXPECT_EQ(w.violation->residual, Rational(-2));
}

TEST(Compare, LambdaMinusThreeWitnesses) {
  const auto p = P("-3", "0", "0");
  const auto rep = compare_with_classification(solve_invariant_forms(p, Window{8, 4}), p);
  EXPECT_EQ(rep.solver_dim, 1u);
  EXPECT_FALSE(rep.match_printed);
  EXPECT_TRUE(rep.match_lemma);
  ASSERT_TRUE(rep.generator.has_value());
  EXPECT_EQ(rep.generator->entries().size(), 1u);
  EXPECT_EQ(rep.generator->get(Yi(0), Yi(0)), Rational(1));
  EXPECT_TRUE(rep.generator->get(BasisElement::L(0), BasisElement::M(0)).is_zero());
  bool triple = false, outside = false;
  for (const auto& w : rep.witnesses) {
    if (w.kind == Witness::Kind::ViolatedTriple && w.violation->residual == Rational(-2) &&
        w.violation->triple[2] == BasisElement::M(0))
      triple = true;
    if (w.kind == Witness::Kind::KernelOutsideSpan && w.form == rep.generator) outside = true;
  }
  EXPECT_TRUE(triple);
  EXPECT_TRUE(outside);
}

TEST(Compare, RefusesUnstabilized) {
  InvSolution s;
  s.params = P("-2", "0", "0");
  s.window = Window{8, 4};
  s.projected_dimension = 2;
  s.next_projected_dimension = 1;
  s.stabilized = false;
  try {
    compare_with_classification(s, s.params);
    FAIL() << "expected UnstabilizedError";
  } catch (const UnstabilizedError& e) {
    EXPECT_NE(std::string(e.what()).find("enlarge"), std::string::npos);
  }
  EXPECT_THROW(lemma_suite(s.params, s), UnstabilizedError);
}

TEST(Compare, MinimalViolationPrefersProbeTriple) {
  const auto p = P("-1", "1/2", "0");
  const auto v = minimal_violation(closed_form(p, FamilyTag::APrinted, Window{6, 0}), Window{6, 0});
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->triple,
            (std::array<BasisElement, 3>{BasisElement::L(1), BasisElement::L(-1), BasisElement::M(-1)}));
  EXPECT_FALSE(minimal_violation(closed_form(P("-2", "0", "0"), FamilyTag::D, Window{6, 0}), Window{6, 0}));
}

TEST(LemmaSuite, DeKernel) {
  const auto p = P("-2", "0", "0");
  const auto sol = solve_invariant_forms(p, Window{8, 4});
  const auto vs = lemma_suite(p, sol);
  for (const auto& v : vs) {
    EXPECT_TRUE(v.passed) << v.lemma << ": " << v.witness;
    EXPECT_FALSE(v.vacuous);
  }
  EXPECT_TRUE(find(vs, "LL").applicable);
  EXPECT_GT(find(vs, "LL").instances, 0u);
  EXPECT_TRUE(find(vs, "YY-05").applicable);
  EXPECT_GT(find(vs, "YY-05").instances, 0u);
  EXPECT_FALSE(find(vs, "LM-01").applicable);
  const auto& g = sol.projected_basis.front();
  EXPECT_EQ(g.get(Yi(1), Yi(-1)), Rational(-2) * g.get(BasisElement::L(0), BasisElement::M(0)));
}

TEST(LemmaSuite, VacuousWhenKernelEmpty) {
  const auto p = P("-2", "1/3", "0");
  const auto sol = solve_invariant_forms(p, Window{8, 4});
  ASSERT_EQ(sol.projected_dimension, 0u);
  for (const auto& v : lemma_suite(p, sol)) {
    EXPECT_TRUE(v.passed);
    if (v.applicable) EXPECT_TRUE(v.vacuous) << v.lemma;
  }
}

TEST(LemmaSuite, FailsOnFormMissingForcedEntries) {
  const auto p = P("-2", "1/2", "0");
  InvSolution s;
  s.params = p;
  s.window = Window{8, 4};
  s.stabilized = true;
  s.projected_basis = {closed_form(p, FamilyTag::EPrinted, Window{4, 0})};
  s.projected_dimension = 1;
  s.next_projected_dimension = 1;
  const auto vs = lemma_suite(p, s);
  const auto& lm = find(vs, "YY-05");
  EXPECT_FALSE(lm.passed);
  EXPECT_FALSE(lm.witness.empty());
  EXPECT_TRUE(find(vs, "LM-02").passed);
}

TEST(LemmaSuite, PrintedLambdaMinusOneFormOnlyFailsInvariance) {
  // Each lemma statement holds for it; the contradiction needs the triple
  // (L_1, L_-1, M_0) directly.
  const auto p = P("-1", "0", "0");
  InvSolution s;
  s.params = p;
  s.window = Window{8, 4};
  s.stabilized = true;
  s.projected_basis = {closed_form(p, FamilyTag::APrinted, Window{4, 0})};
  s.projected_dimension = 1;
  s.next_projected_dimension = 1;
  for (const auto& v : lemma_suite(p, s)) EXPECT_TRUE(v.passed) << v.lemma;
  EXPECT_FALSE(invariance_violations(s.projected_basis[0], Window{4, 0}).empty());
}
