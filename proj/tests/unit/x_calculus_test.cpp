#include <gtest/gtest.h>

#include <random>

#include "extline/quiver_modules.hpp"
#include "extline/x_calculus.hpp"

using namespace extline;

namespace {

constexpr EndPosition U = EndPosition::Up;
constexpr EndPosition D = EndPosition::Down;

XLabel lab(EndPosition a, int i, EndPosition b, int j) { return {{a, i}, {b, j}}; }

EndPosition flip(EndPosition p) { return p == U ? D : U; }

// Orbit enumeration: breadth-first closure of a raw label under the defining
// moves, restricted to a window of indices.
std::vector<XLabel> orbit(int n, const XLabel& start) {
  std::vector<XLabel> seen{start};
  auto push = [&](const XLabel& x) {
    if (std::abs(x.left.index) > 4 * n || std::abs(x.right.index) > 4 * n) return;
    for (const auto& y : seen)
      if (y == x) return;
    seen.push_back(x);
  };
  for (std::size_t k = 0; k < seen.size(); ++k) {
    const XLabel x = seen[k];
    auto moves_on = [&](EndLabel e) {
      std::vector<EndLabel> out;
      out.push_back({flip(e.position), 1 - e.index});
      out.push_back({e.position, e.index + 2 * n});
      out.push_back({e.position, e.index - 2 * n});
      return out;
    };
    for (const auto& e : moves_on(x.left)) push({e, x.right});
    for (const auto& e : moves_on(x.right)) push({x.left, e});
    push({{flip(x.right.position), x.right.index}, {flip(x.left.position), x.left.index}});
  }
  return seen;
}

}  // namespace

TEST(XCalculus, NormalizationExamples) {
  EXPECT_EQ(normalize_x(3, XLabel::up_up(-2, 4)), XLabel::simple(3));
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(normalize_x(4, XLabel::up_up(i, i)), XLabel::simple(i));
  EXPECT_EQ(normalize_x(3, XLabel::up_up(0, 2)), lab(D, 1, U, 2));
  EXPECT_EQ(normalize_x(5, XLabel::up_up(0, 4)), lab(D, 1, U, 4));
  EXPECT_THROW(normalize_x(3, XLabel::up_up(1, 2)), ParityError);
}

TEST(XCalculus, NormalizationIsIdempotentAndOrbitConstant) {
  std::mt19937 rng(1);
  for (int n = 1; n <= 6; ++n) {
    std::uniform_int_distribution<int> idx(-3 * n, 3 * n);
    for (int trial = 0; trial < 30; ++trial) {
      int i = idx(rng), j = idx(rng);
      if ((i - j) % 2 != 0) ++j;
      const XLabel raw = XLabel::up_up(i, j);
      const XLabel c = normalize_x(n, raw);
      EXPECT_EQ(normalize_x(n, c), c);
      for (const XLabel& y : orbit(n, raw)) EXPECT_EQ(normalize_x(n, y), c) << y.to_string();
    }
  }
}

TEST(XCalculus, CanonicalLabelsAreDistinctOrbits) {
  for (int n = 1; n <= 6; ++n) {
    const auto labels = canonical_labels(n);
    for (const auto& x : labels) EXPECT_EQ(normalize_x(n, x), x);
    // n simples plus, for each pair lo < hi, two position patterns
    EXPECT_EQ(labels.size(), static_cast<std::size_t>(n + n * (n - 1)));
  }
}

TEST(XCalculus, StructureExamples) {
  const XStructure a = structure_of(3, XLabel::up_up(1, 3));
  EXPECT_EQ(a.head, (std::set<int>{1, 3}));
  EXPECT_EQ(a.socle, (std::set<int>{2}));
  EXPECT_EQ(a.dim, 3);
  const XStructure b = structure_of(3, lab(D, 1, D, 3));
  EXPECT_EQ(b.head, (std::set<int>{2}));
  EXPECT_EQ(b.socle, (std::set<int>{1, 3}));
  const XStructure s = structure_of(3, XLabel::simple(2));
  EXPECT_EQ(s.head, (std::set<int>{2}));
  EXPECT_EQ(s.socle, (std::set<int>{2}));
  EXPECT_EQ(s.dim, 1);
  EXPECT_THROW(structure_of(3, XLabel::up_up(3, 1)), std::invalid_argument);
}

TEST(XCalculus, SyzygyLabelExamples) {
  EXPECT_EQ(syzygy_label(4, XLabel::simple(2)), normalize_x(4, XLabel::up_up(1, 3)));
  EXPECT_EQ(syzygy_label(2, syzygy_label(2, XLabel::simple(1))), XLabel::simple(2));
  EXPECT_EQ(syzygy_label(3, XLabel::up_up(1, 3)), lab(D, 1, D, 3));
}

TEST(XCalculus, RealizedStructureMatchesOracle) {
  for (int n = 1; n <= 6; ++n) {
    LineAlgebra alg(n, FieldSpec(2));
    for (const XLabel& x : canonical_labels(n)) {
      const QuiverRep m = realize_x(alg, x);
      ASSERT_TRUE(m.satisfies_relations()) << x.to_string();
      const XStructure s = structure_of(n, x);
      const SimpleMultiset h = head(m), so = socle_multiset(m);
      for (int v = 1; v <= n; ++v) {
        EXPECT_EQ(h[v - 1], s.head.count(v)) << x.to_string();
        EXPECT_EQ(so[v - 1], s.socle.count(v)) << x.to_string();
      }
      EXPECT_EQ(static_cast<int>(m.total_dim()), s.dim);
    }
  }
  LineAlgebra alg(3, FieldSpec(2));
  EXPECT_EQ(realize_x(alg, XLabel::up_up(1, 3)).dims(), (std::vector<std::size_t>{1, 1, 1}));
}

TEST(XCalculus, SyzygyFormulaAgainstOracle) {
  for (int n = 1; n <= 5; ++n) {
    LineAlgebra alg(n, FieldSpec(2));
    for (const XLabel& x : canonical_labels(n)) {
      const QuiverRep lhs = syzygy(alg, realize_x(alg, x));
      const QuiverRep rhs = realize_x(alg, syzygy_label(n, x));
      EXPECT_TRUE(is_isomorphic(lhs, rhs)) << n << " " << x.to_string();
    }
  }
}

TEST(XCalculus, ExtCriterionMatchesOracle) {
  for (int n = 1; n <= 4; ++n) {
    LineAlgebra alg(n, FieldSpec(2));
    for (int i = 1; i <= n; ++i) {
      QuiverRep om = simple_module(alg, i);
      for (int k = 0; k <= 4 * n; ++k) {
        const XStructure s = structure_of(n, syzygy_power_label(n, i, k));
        for (int j = 1; j <= n; ++j)
          EXPECT_EQ(hom_space(om, simple_module(alg, j)).size(), s.head.count(j)) << n << i << j << k;
        om = syzygy(alg, om);
      }
    }
  }
}

TEST(PSum, NormalizationExamples) {
  EXPECT_EQ(normalize_p(3, -1, 5), (PSum{2, 2}));
  EXPECT_EQ(normalize_p(2, -2, 4), (PSum{1, 1}));
  EXPECT_EQ(normalize_p(3, 1, 3), (PSum{1, 3}));
  EXPECT_EQ(normalize_p(3, 1, 3).to_string(), "P1+P3");
  EXPECT_THROW(normalize_p(3, 1, 2), ParityError);
}

TEST(PSum, OrbitConstant) {
  for (int n = 1; n <= 6; ++n)
    for (int i = -2 * n; i <= 2 * n; ++i)
      for (int j = -2 * n; j <= 2 * n; ++j) {
        if ((i - j) % 2 != 0) continue;
        const PSum c = normalize_p(n, i, j);
        EXPECT_GE(c.lo, 1);
        EXPECT_LE(c.hi, n);
        EXPECT_EQ(normalize_p(n, c.lo, c.hi), c);
        EXPECT_EQ(normalize_p(n, j + 1, i - 1), c);
        EXPECT_EQ(normalize_p(n, i, -j), c);
        EXPECT_EQ(normalize_p(n, i, j + 2 * n), c);
        EXPECT_EQ(normalize_p(n, i - 2 * n, j), c);
        EXPECT_EQ(normalize_p(n, 2 - i, j), c);
      }
}

TEST(PSum, CoverConsistency) {
  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i)
      for (int k = 0; k <= 4 * n; ++k) {
        const PSum p = normalize_p(n, i - k, i + k);
        const XStructure s = structure_of(n, syzygy_power_label(n, i, k));
        const auto idx = p.indices();
        EXPECT_EQ(std::set<int>(idx.begin(), idx.end()), s.head);
      }
}
