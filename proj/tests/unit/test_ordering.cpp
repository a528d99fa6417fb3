#include "rforge/cascade.hpp"
#include "rforge/minors.hpp"
#include "rforge/ordering.hpp"
#include "rforge/walks.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace rforge;

TEST(DiagonalWeights, DegreeTwoThree) {
  auto dw = build_diagonal_weights(2, 3);
  EXPECT_EQ(dw.increment(3, 1), 1);
  EXPECT_EQ(dw.increment(2, 1), 2);
  EXPECT_EQ(dw.increment(1, 1), 3);
  EXPECT_EQ(dw.increment(3, 2), 4);
  EXPECT_EQ(dw.increment(2, 2), 5);
  EXPECT_EQ(dw.increment(1, 2), 6);
  for (int k = 1; k <= 3; ++k) EXPECT_EQ(dw.weight(k, 2), 1);
  EXPECT_EQ(dw.weight(1, 1), 7);
  EXPECT_EQ(dw.weight(2, 1), 6);
  EXPECT_EQ(dw.weight(3, 1), 5);
  EXPECT_EQ(dw.weight(1, 0), 10);
  EXPECT_EQ(dw.weight(2, 0), 8);
  EXPECT_EQ(dw.weight(3, 0), 6);
}

TEST(DiagonalWeights, DegreeOneTwo) {
  auto dw = build_diagonal_weights(1, 2);
  EXPECT_EQ(dw.increment(2, 1), 1);
  EXPECT_EQ(dw.increment(1, 1), 2);
  EXPECT_EQ(dw.weight(1, 1), 1);
  EXPECT_EQ(dw.weight(2, 1), 1);
  EXPECT_EQ(dw.weight(1, 0), 3);
  EXPECT_EQ(dw.weight(2, 0), 2);
}

TEST(DiagonalWeights, Invariants) {
  for (int d = 1; d <= 4; ++d)
    for (int n = 2; n <= 5; ++n) {
      auto dw = build_diagonal_weights(d, n);
      std::int64_t prev = 0;
      for (int l = 1; l <= d; ++l)
        for (int k = n; k >= 1; --k) {
          EXPECT_GT(dw.increment(k, l), prev);
          prev = dw.increment(k, l);
        }
      for (int k = 1; k <= n; ++k) {
        EXPECT_EQ(dw.weight(k, d), 1);
        for (int l = 0; l < d; ++l) EXPECT_EQ(dw.weight(k, l) - dw.weight(k, l + 1), dw.increment(k, l + 1));
      }
    }
}

TEST(DiagonalOrder, TwoByTwo) {
  auto ring = Ring::coefficients(1, 2);
  auto order = diagonal_order(build_diagonal_weights(1, 2));
  Monomial lead{{ring->coefficient_index(1, 0), 1}, {ring->coefficient_index(2, 1), 1}};
  Monomial other{{ring->coefficient_index(1, 1), 1}, {ring->coefficient_index(2, 0), 1}};
  EXPECT_EQ(order.weight(lead), 4);
  EXPECT_EQ(order.weight(other), 3);
  EXPECT_TRUE(order.compare(lead, other) > 0);
}

TEST(DiagonalOrder, ExtendedRingIsBlock) {
  auto ring = Ring::make(2, 3, true, {});
  auto order = diagonal_order(build_diagonal_weights(2, 3), ring);
  EXPECT_TRUE(order.is_total());
  EXPECT_TRUE(order.greater(Monomial::variable(ring->eliminand_index()),
                            Monomial::variable(ring->coefficient_index(1, 0), 5)));
}

TEST(VerifyDiagonal, Grid) {
  const std::vector<std::tuple<int, int, std::size_t>> cases{{1, 2, 1}, {2, 2, 1}, {2, 3, 16}, {3, 2, 1}};
  for (auto [d, n, count] : cases) {
    auto report = verify_diagonal_property(d, n);
    EXPECT_EQ(report.checks.size(), count);
    EXPECT_EQ(report.violations(), 0u);
    EXPECT_TRUE(report.strict_everywhere());
  }
  auto syl = verify_diagonal_property(2, 2);
  auto ring = Ring::coefficients(2, 2);
  auto i = [&](int p, int q) { return ring->coefficient_index(p, q); };
  EXPECT_EQ(syl.checks[0].leading, (Monomial{{i(1, 0), 1}, {i(2, 1), 1}, {i(1, 1), 1}, {i(2, 2), 1}}));
}

// For positions (i,j), (p,q) of a minor with i < p and q < j the swap lowers
// the weight: w(y_{i,j}) + w(y_{p,q}) < w(y_{i,q}) + w(y_{p,j}).
TEST(VerifyDiagonal, SwapInequality) {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}}) {
    auto dw = build_diagonal_weights(d, n);
    for (int k = 1; k <= d; ++k) {
      auto m = build_cascade(d, n, k);
      auto w = [&](int row, int col) -> std::optional<std::int64_t> {
        auto v = m.variable_at(m.label(row), col);
        if (!v) return std::nullopt;
        return dw.weight(v->i, v->j);
      };
      for (int i = 1; i <= m.rows(); ++i)
        for (int p = i + 1; p <= m.rows(); ++p) {
          for (int q = 1; q <= m.cols(); ++q)
            for (int j = q + 1; j <= m.cols(); ++j) {
              auto ij = w(i, j), pq = w(p, q), iq = w(i, q), pj = w(p, j);
              if (!ij || !pq || !iq || !pj) continue;
              EXPECT_LT(*ij + *pq, *iq + *pj) << d << n << k << " rows " << i << "," << p << " cols " << q << "," << j;
            }
        }
    }
  }
}

TEST(VerifyDiagonal, ZeroIffDiagonalHasZero) {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}, {2, 4}})
    for (int k = 1; k <= d; ++k) {
      auto m = build_cascade(d, n, k);
      for (const auto& rows : [&] {
             std::vector<std::vector<int>> all;
             std::vector<bool> pick(m.rows(), false);
             if (m.rows() < m.cols()) return all;
             std::fill(pick.begin(), pick.begin() + m.cols(), true);
             do {
               std::vector<int> sel;
               for (int r = 0; r < m.rows(); ++r)
                 if (pick[r]) sel.push_back(r + 1);
               all.push_back(sel);
             } while (std::prev_permutation(pick.begin(), pick.end()));
             return all;
           }()) {
        bool diagonal_zero = false;
        for (std::size_t s = 0; s < rows.size(); ++s)
          diagonal_zero = diagonal_zero || m.entry(rows[s], static_cast<int>(s) + 1).is_zero();
        EXPECT_EQ(diagonal_zero, oracle::leibniz_determinant(oracle::submatrix(m, rows), m.ring()).is_zero());
      }
    }
}
