#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "extline/ext_poincare.hpp"
#include "extline/gamma.hpp"

using namespace extline;

TEST(QuiverQ, ArrowsAndDegrees) {
  const QuiverQ q(4);
  EXPECT_EQ(q.arrows().size(), 10u);
  EXPECT_EQ(q.source({ArrowKind::X, 2}), 2);
  EXPECT_EQ(q.target({ArrowKind::X, 2}), 3);
  EXPECT_EQ(q.source({ArrowKind::XStar, 2}), 3);
  EXPECT_EQ(q.target({ArrowKind::XStar, 2}), 2);
  EXPECT_EQ(q.target({ArrowKind::Y, 1}), 4);
  EXPECT_EQ(q.degree({ArrowKind::Y, 1}), 4);
  EXPECT_EQ(q.degree({ArrowKind::XStar, 3}), 1);
  EXPECT_THROW(q.check({ArrowKind::X, 4}), std::out_of_range);

  const QuiverQ one(1);
  ASSERT_EQ(one.arrows().size(), 1u);
  EXPECT_EQ(one.target(one.arrows()[0]), 1);
  EXPECT_EQ(one.degree(one.arrows()[0]), 1);
}

TEST(PathWord, ParsePrintRoundTrip) {
  const QuiverQ q(3);
  const PathWord w = PathWord::parse(q, "y1 x2* x1*");
  EXPECT_EQ(w.source(), 1);
  EXPECT_EQ(w.target(), 1);
  EXPECT_EQ(w.degree(), 5);
  EXPECT_EQ(w.to_string(), "y1 x2* x1*");
  EXPECT_EQ(PathWord::parse(q, "e2"), PathWord(q, 2));
  EXPECT_EQ(PathWord(q, 2).to_string(), "e2");
  EXPECT_THROW(PathWord::parse(q, "x1 x1"), std::invalid_argument);
  EXPECT_THROW(PathWord::parse(q, "z1"), std::invalid_argument);
  EXPECT_THROW(PathWord::parse(q, "x3"), std::out_of_range);
  EXPECT_EQ(PathWord::parse(q, "x1").then(PathWord::parse(q, "x2")), PathWord::parse(q, "x1 x2"));
  EXPECT_EQ(PathWord(q, 1).then(PathWord::parse(q, "x1")), PathWord::parse(q, "x1"));
}

TEST(RelatorSet, HomogeneousWithEndpoints) {
  for (int n = 1; n <= 6; ++n) {
    const RelatorSet rels{QuiverQ(n)};
    const std::size_t expected = n == 1 ? 0 : 2 + (n - 2) + 2 * (n - 1);
    EXPECT_EQ(rels.relators().size(), expected);
    for (const Relator& r : rels.relators()) {
      for (const auto& [c, w] : r.terms) {
        EXPECT_EQ(w.source(), r.source()) << r.name;
        EXPECT_EQ(w.target(), r.target()) << r.name;
        EXPECT_EQ(w.degree(), r.degree()) << r.name;
      }
      EXPECT_EQ(r.degree(), (r.family == "a" || r.family == "b") ? 2 : n + 1);
    }
  }
  const RelatorSet three{QuiverQ(3)};
  EXPECT_EQ(three.relators()[0].name, "x1 x1*");
  EXPECT_EQ(three.relators()[1].name, "x2* x2");
  EXPECT_EQ(three.relators()[2].name, "x1* x1 - x2 x2*");
  EXPECT_EQ(three.relators()[3].name, "x1 y2 - y1 x2*");
  EXPECT_EQ(three.without_family("a").relators().size(), three.relators().size() - 2);
}

TEST(GradedDimension, SingleVertexIsPolynomial) {
  const GradedDims d = graded_dimension(RelatorSet(QuiverQ(1)), 12);
  for (int k = 0; k <= 12; ++k) EXPECT_EQ(d.at(1, 1, k), 1);
}

TEST(GradedDimension, DegreeZeroIsIdentity) {
  const GradedDims d = graded_dimension(RelatorSet(QuiverQ(4)), 0);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) EXPECT_EQ(d.at(i, j, 0), i == j ? 1 : 0);
}

TEST(GradedDimension, MatchesExtTable) {
  for (int n = 1; n <= 5; ++n) {
    const int K = n <= 4 ? 4 * n : 2 * n;
    const ExtTable t = ext_table(n, K);
    for (std::uint32_t p : {2u, 0u, 3u}) {
      const GradedDims d = graded_dimension(RelatorSet(QuiverQ(n)), K, FieldSpec(p));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) EXPECT_EQ(d.row(i, j), t.row(i, j)) << n << " " << p << " " << i << j;
    }
  }
}

TEST(GradedDimension, IndependentOfRelatorOrder) {
  std::mt19937 rng(7);
  for (int n = 2; n <= 5; ++n) {
    const QuiverQ q(n);
    const RelatorSet rels(q);
    const GradedDims ref = graded_dimension(rels, 2 * n + 2);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Relator> shuffled = rels.relators();
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      EXPECT_EQ(graded_dimension(RelatorSet(q, shuffled), 2 * n + 2), ref);
    }
  }
}

TEST(GradedDimension, DroppingRelatorAEnlarges) {
  const QuiverQ q(2);
  const GradedDims full = graded_dimension(RelatorSet(q), 4);
  const GradedDims dropped = graded_dimension(RelatorSet(q).without_family("a"), 4);
  bool larger = false;
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 0; k <= 4; ++k) {
        EXPECT_GE(dropped.at(i, j, k), full.at(i, j, k));
        larger = larger || dropped.at(i, j, k) > full.at(i, j, k);
      }
  EXPECT_TRUE(larger);
  EXPECT_EQ(dropped.at(1, 1, 2), 1);
}

TEST(GammaQuotient, RelatorsReduceToZero) {
  for (int n = 2; n <= 5; ++n) {
    const RelatorSet rels{QuiverQ(n)};
    const GammaQuotient g(rels, n + 1, FieldSpec(0));
    for (const Relator& r : rels.relators()) {
      Matrix total = g.reduce(r.terms[0].second);
      total = total - total;
      for (const auto& [c, w] : r.terms) total = total + g.field().from_int(c) * g.reduce(w);
      EXPECT_TRUE(total.is_zero()) << r.name;
    }
  }
}

TEST(GammaQuotient, NonzeroXPathsObeyLengthBound) {
  // an x-only path i -> j survives iff |i-j| <= k <= N-1-|N+1-i-j| with k = |i-j| mod 2
  for (int n = 2; n <= 5; ++n) {
    const QuiverQ q(n);
    const GammaQuotient g(RelatorSet(q), n + 1, FieldSpec(2));
    std::vector<PathWord> frontier;
    for (int v = 1; v <= n; ++v) frontier.emplace_back(q, v);
    for (int len = 1; len <= n + 1; ++len) {
      std::vector<PathWord> next;
      for (const PathWord& w : frontier)
        for (const Arrow& a : q.arrows()) {
          if (a.kind == ArrowKind::Y || q.source(a) != w.target()) continue;
          next.push_back(w.then(PathWord(q, std::vector<Arrow>{a})));
        }
      frontier = std::move(next);
      for (const PathWord& w : frontier) {
        const int i = w.source(), j = w.target(), k = w.degree();
        const bool bound = std::abs(i - j) <= k && k <= n - 1 - std::abs(n + 1 - i - j);
        // parity holds automatically for x-only words
        EXPECT_EQ(!g.is_zero(w), bound) << n << ": " << w.to_string();
      }
    }
  }
}

TEST(NormalForm, Examples) {
  EXPECT_EQ(normal_form_monomial(3, 1, 1, 5)->to_string(), "y1 x2* x1*");
  EXPECT_EQ(normal_form_monomial(3, 1, 3, 2)->to_string(), "x1 x2");
  EXPECT_EQ(normal_form_monomial(3, 2, 2, 0)->to_string(), "e2");
  EXPECT_EQ(normal_form_monomial(2, 1, 1, 4)->to_string(), "y1 y2");
  EXPECT_EQ(normal_form_monomial(1, 1, 1, 3)->to_string(), "y1 y1 y1");
  EXPECT_FALSE(normal_form_monomial(3, 1, 3, 1));
  EXPECT_FALSE(normal_form_monomial(3, 1, 1, 1));
}

TEST(NormalForm, ExistsExactlyWhenExtIsNonzero) {
  for (int n = 1; n <= 7; ++n) {
    const QuiverQ q(n);
    const GammaQuotient g(RelatorSet(q), 4 * n, FieldSpec(2));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 0; k <= 4 * n; ++k) {
          const auto w = normal_form_monomial(n, i, j, k);
          ASSERT_EQ(w.has_value(), ext_dim_via_x(n, i, j, k) == 1) << n << i << j << k;
          if (!w) continue;
          EXPECT_EQ(w->source(), i);
          EXPECT_EQ(w->target(), j);
          EXPECT_EQ(w->degree(), k);
          EXPECT_FALSE(g.is_zero(*w)) << w->to_string();
        }
  }
}

TEST(EvaluateWord, RelationsAndNormalForms) {
  for (std::uint32_t p : {2u, 0u}) {
    for (int n = 2; n <= 4; ++n) {
      const LineAlgebra alg(n, FieldSpec(p));
      const ResolutionSet rs(alg);
      const QuiverQ q(n);
      EXPECT_TRUE(evaluate_word(rs, PathWord::parse(q, "x1 x1*")).verdict.null_homotopic());
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int k = 0; k <= 2 * n; ++k)
            if (auto w = normal_form_monomial(n, i, j, k))
              EXPECT_EQ(evaluate_word(rs, *w).verdict.verdict, HomotopyVerdict::NotNullHomotopic) << w->to_string();
    }
  }
  const LineAlgebra alg(4, FieldSpec(0));
  const ResolutionSet rs(alg);
  const QuiverQ q(4);
  for (int i = 1; i <= 2; ++i) {
    const auto a = evaluate_word(rs, PathWord(q, {{ArrowKind::XStar, i}, {ArrowKind::X, i}}));
    const auto b = evaluate_word(rs, PathWord(q, {{ArrowKind::X, i + 1}, {ArrowKind::XStar, i + 1}}));
    EXPECT_TRUE(null_homotopy(alg, a.value.representative - b.value.representative).null_homotopic());
  }
}

TEST(EvaluateWord, ConcatenationIsReversedComposition) {
  const LineAlgebra alg(4, FieldSpec(0));
  const ResolutionSet rs(alg);
  const QuiverQ q(4);
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"x1", "x2"}, {"x1 x2", "y3"}, {"y2", "x2* x1*"}, {"x1*", "x1 y2"}, {"e1", "x1"}};
  for (const auto& [u, v] : pairs) {
    const PathWord wu = PathWord::parse(q, u), wv = PathWord::parse(q, v);
    const ChainMap whole = evaluate_word(rs, wu.then(wv)).value.representative;
    const ChainMap parts = compose(alg, evaluate_word(rs, wv).value.representative, evaluate_word(rs, wu).value.representative);
    EXPECT_TRUE(strictly_equal(whole, parts)) << u << " | " << v;
  }
}

TEST(MainTheorem, PassesAtDeskScale) {
  for (std::uint32_t p : {2u, 0u}) {
    for (int n = 1; n <= 4; ++n) {
      const LineAlgebra alg(n, FieldSpec(p));
      const ResolutionSet rs(alg);
      const MainTheoremReport rep = verify_main_theorem(rs, 2 * n + 2);
      EXPECT_TRUE(rep.ok()) << n << " " << p;
      const auto relators = std::count_if(rep.checks.begin(), rep.checks.end(), [](const GammaCheck& c) { return c.kind == "relator"; });
      EXPECT_EQ(static_cast<std::size_t>(relators), RelatorSet(QuiverQ(n)).relators().size());
    }
  }
}
