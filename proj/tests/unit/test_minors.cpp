#include "rforge/cascade.hpp"
#include "rforge/minors.hpp"
#include "rforge/walks.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace rforge;

namespace {

Polynomial a(const RingPtr& ring, int i, int j) { return Polynomial::variable(ring, VariableId::coefficient(i, j)); }

bool equal_up_to_sign(const Polynomial& p, const Polynomial& q) { return p == q || p == -q; }

}  // namespace

TEST(MinorDet, TwoByTwo) {
  auto m = build_cascade(1, 2, 1);
  auto ring = m.ring();
  EXPECT_EQ(minor_det(m, RowSelection::all_rows(m)), a(ring, 1, 0) * a(ring, 2, 1) - a(ring, 1, 1) * a(ring, 2, 0));
}

TEST(MinorDet, ThreeByThree) {
  auto m = build_cascade(2, 3, 1);
  auto det = minor_det(m, RowSelection::all_rows(m));
  EXPECT_EQ(det.size(), 6u);
  EXPECT_EQ(det, oracle::leibniz_determinant(oracle::submatrix(m, {1, 2, 3}), m.ring()));
}

TEST(MinorDet, SylvesterOracle) {
  for (int d = 1; d <= 3; ++d) {
    auto m = build_cascade(d, 2, d);
    auto ring = m.ring();
    auto det = minor_det(m, RowSelection::all_rows(m));
    auto res = oracle::sylvester_resultant(ring, 1, 2);
    EXPECT_TRUE(equal_up_to_sign(det, res)) << "d=" << d;
    EXPECT_TRUE(equal_up_to_sign(sylvester_resultant(ring, 1, 2), res));
  }
}

TEST(MinorDet, LaplaceMatchesLeibniz) {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {3, 3}, {2, 4}})
    for (int k = 1; k <= d; ++k) {
      auto m = build_cascade(d, n, k);
      for (const auto& rec : enumerate_generators(d, n, k)) {
        std::vector<int> rows;
        for (const auto& label : rec.selection.rows()) rows.push_back(m.row_of(label));
        EXPECT_EQ(rec.poly, oracle::leibniz_determinant(oracle::submatrix(m, rows), m.ring()));
      }
    }
}

TEST(MinorDet, ZeroDiagonalShortCircuits) {
  auto m = build_cascade(3, 3, 3);
  RowSelection sel(3, 3, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}});
  std::vector<int> rows;
  for (const auto& label : sel.rows()) rows.push_back(m.row_of(label));
  EXPECT_TRUE(minor_det(m, sel).is_zero());
  EXPECT_TRUE(oracle::leibniz_determinant(oracle::submatrix(m, rows), m.ring()).is_zero());
}

TEST(EnumerateGenerators, Counts) {
  auto g23 = enumerate_generators(2, 3);
  EXPECT_EQ(g23.size(), 16u);
  EXPECT_EQ(std::count_if(g23.begin(), g23.end(), [](const GeneratorRecord& r) { return r.k == 1; }), 1);
  EXPECT_EQ(std::count_if(g23.begin(), g23.end(), [](const GeneratorRecord& r) { return r.k == 2; }), 15);
  auto g22 = enumerate_generators(2, 2);
  ASSERT_EQ(g22.size(), 1u);
  EXPECT_EQ(g22[0].k, 2);
  auto g13 = enumerate_generators(1, 3);
  EXPECT_EQ(g13.size(), 3u);
  for (const auto& r : g13) EXPECT_EQ(r.degree, 2);
}

TEST(EnumerateGenerators, HomogeneousAndMultilinear) {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 4}})
    for (const auto& rec : enumerate_generators(d, n)) {
      EXPECT_FALSE(rec.poly.is_zero());
      EXPECT_TRUE(rec.poly.is_homogeneous());
      EXPECT_EQ(rec.poly.total_degree(), d + rec.k);
      EXPECT_EQ(rec.degree, d + rec.k);
      // Each term uses as many a_{j,*} as rows of polynomial j are selected.
      std::vector<int> rows_per_poly(n + 1, 0);
      for (const auto& label : rec.selection.rows()) ++rows_per_poly[label.poly];
      const auto& ring = *rec.poly.ring();
      for (const auto& t : rec.poly.terms()) {
        std::vector<int> used(n + 1, 0);
        for (const auto& f : t.monomial.factors()) used[ring.variable(f.var).i] += static_cast<int>(f.exp);
        EXPECT_EQ(used, rows_per_poly);
      }
      EXPECT_EQ(rec.normalized, content_normalize(rec.poly));
    }
}

TEST(EnumerateGenerators, PairwiseResultantsAmongTopMinors) {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 3}, {2, 4}, {3, 3}}) {
    auto top = enumerate_generators(d, n, d);
    auto ring = Ring::coefficients(d, n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        std::vector<RowLabel> rows;
        for (int b = 1; b <= d; ++b) {
          rows.push_back({b, i});
          rows.push_back({b, j});
        }
        RowSelection sel(d, n, d, rows);
        auto it = std::find_if(top.begin(), top.end(), [&](const GeneratorRecord& r) { return r.selection == sel; });
        ASSERT_NE(it, top.end());
        EXPECT_TRUE(equal_up_to_sign(it->poly, oracle::sylvester_resultant(ring, i, j)));
      }
  }
}

TEST(GeneratorsForBasis, Examples) {
  EXPECT_EQ(generators_for_basis(2, 2).size(), 1u);
  EXPECT_EQ(generators_for_basis(1, 2).size(), 1u);
  auto g = generators_for_basis(2, 3);
  EXPECT_EQ(g.size(), 7u);
  for (const auto& r : g) EXPECT_TRUE(is_reduced(r.walk.steps, 2, 3));
}
