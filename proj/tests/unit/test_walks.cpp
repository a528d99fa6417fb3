#include "rforge/cascade.hpp"
#include "rforge/errors.hpp"
#include "rforge/geometry.hpp"
#include "rforge/walks.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace rforge;

namespace {

using Steps = std::vector<LatticePoint>;

const std::vector<std::pair<int, int>> kGrid{{1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}};

std::set<std::size_t> vertex_set(const MinorWalk& w, const Ring& ring) {
  std::set<std::size_t> out;
  for (const auto& p : w.steps) out.insert(ring.coefficient_index(p.u, p.v));
  return out;
}

}  // namespace

TEST(RowsToWalk, Examples) {
  EXPECT_EQ(rows_to_walk(RowSelection(2, 3, 1, {{1, 1}, {1, 2}, {1, 3}})).steps, (Steps{{1, 0}, {2, 1}, {3, 2}}));
  EXPECT_EQ(rows_to_walk(RowSelection(1, 2, 1, {{1, 1}, {1, 2}})).steps, (Steps{{1, 0}, {2, 1}}));
  EXPECT_EQ(rows_to_walk(RowSelection(2, 2, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}})).steps,
            (Steps{{1, 0}, {2, 1}, {1, 1}, {2, 2}}));
}

TEST(RowsToWalk, ZeroMinor) {
  // Blocks 1 and 2 only: the last column is empty.
  RowSelection sel(3, 3, 3, {{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}});
  EXPECT_FALSE(try_rows_to_walk(sel));
  EXPECT_THROW(rows_to_walk(sel), ZeroMinor);
}

TEST(RowsToWalk, RoundTrip) {
  for (auto [d, n] : kGrid)
    for (int k = 1; k <= d; ++k)
      for (const auto& w : enumerate_walks(d, n, k)) EXPECT_EQ(rows_to_walk(walk_to_rows(w, d, n)), w);
}

TEST(IsReduced, Examples) {
  Steps w{{1, 0}, {2, 1}, {3, 2}};
  EXPECT_TRUE(is_minor_walk(w, 2, 3));
  EXPECT_TRUE(is_reduced(w, 2, 3));
  Steps back{{1, 0}, {1, 1}, {1, 0}, {2, 1}, {3, 2}};
  EXPECT_FALSE(is_reduced(back, 2, 3));
  Steps sylvester{{1, 0}, {2, 1}, {1, 1}, {2, 2}};
  EXPECT_TRUE(is_minor_walk(sylvester, 2, 2));
  EXPECT_TRUE(is_reduced(sylvester, 2, 2));
}

TEST(IsReduced, AgreesWithDefinition) {
  for (auto [d, n] : kGrid)
    for (int len = d + 1; len <= 2 * d + 1; ++len)
      for (const auto& w : oracle::all_minor_walks(d, n, len)) {
        EXPECT_TRUE(is_minor_walk(w, d, n));
        EXPECT_EQ(is_reduced(w, d, n), oracle::is_reduced_by_definition(w, d, n)) << d << "," << n << " len " << len;
      }
}

// Nonzero maximal minors of M_k <-> minor walks of length d+k.
TEST(EnumerateWalks, BijectionWithNonzeroMinors) {
  for (auto [d, n] : kGrid)
    for (int k = 1; k <= d; ++k) {
      auto m = build_cascade(d, n, k);
      std::vector<std::vector<int>> from_walks;
      for (const auto& w : enumerate_walks(d, n, k)) {
        std::vector<int> rows;
        const auto sel = walk_to_rows(w, d, n);
        for (const auto& label : sel.rows()) rows.push_back(m.row_of(label));
        from_walks.push_back(rows);
      }
      auto sorted = from_walks;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_EQ(sorted, from_walks) << "enumeration order";
      EXPECT_EQ(sorted, oracle::nonzero_selections(m)) << d << "," << n << "," << k;
      EXPECT_EQ(enumerate_walks(d, n, k).size(), oracle::all_minor_walks(d, n, d + k).size());
    }
}

TEST(EnumerateWalks, SmallCases) {
  auto w = enumerate_walks(1, 2, 1);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_EQ(w[0].steps, (Steps{{1, 0}, {2, 1}}));
  auto r = enumerate_reduced(2, 2);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].length(), 4u);
}

TEST(EnumerateReduced, MatchesFilteredWalks) {
  for (auto [d, n] : kGrid) {
    std::vector<MinorWalk> filtered;
    for (int k = 1; k <= d; ++k)
      for (const auto& w : enumerate_walks(d, n, k))
        if (oracle::is_reduced_by_definition(w.steps, d, n)) filtered.push_back(w);
    auto direct = enumerate_reduced(d, n);
    std::sort(filtered.begin(), filtered.end());
    std::sort(direct.begin(), direct.end());
    EXPECT_EQ(direct, filtered) << d << "," << n;
  }
}

// Frozen from the exhaustive definitional filter above.
TEST(EnumerateReduced, FrozenCounts) {
  EXPECT_EQ(enumerate_reduced(2, 3).size(), 7u);
  EXPECT_EQ(enumerate_reduced(1, 2).size(), 1u);
  EXPECT_EQ(enumerate_reduced(3, 2).size(), 1u);
  EXPECT_EQ(enumerate_reduced(3, 3).size(), 16u);
  EXPECT_EQ(enumerate_reduced(2, 4).size(), 24u);
}

TEST(EnumerateReduced, LengthsAndSquareFree) {
  for (auto [d, n] : kGrid) {
    auto ring = Ring::coefficients(d, n);
    bool reaches_2d = false;
    for (const auto& w : enumerate_reduced(d, n)) {
      EXPECT_GE(w.length(), static_cast<std::size_t>(d + 1));
      EXPECT_LE(w.length(), static_cast<std::size_t>(2 * d));
      reaches_2d = reaches_2d || w.length() == static_cast<std::size_t>(2 * d);
      EXPECT_TRUE(walk_leading_monomial(w, *ring).is_square_free());
      EXPECT_EQ(vertex_set(w, *ring).size(), w.length());
    }
    EXPECT_TRUE(reaches_2d);
  }
}

TEST(EnumerateReduced, MinimalDivisors) {
  for (auto [d, n] : kGrid) {
    auto ring = Ring::coefficients(d, n);
    std::vector<Monomial> reduced;
    for (const auto& w : enumerate_reduced(d, n)) reduced.push_back(walk_leading_monomial(w, *ring));
    for (std::size_t i = 0; i < reduced.size(); ++i)
      for (std::size_t j = 0; j < reduced.size(); ++j)
        if (i != j) EXPECT_FALSE(reduced[i].divides(reduced[j]));
    for (int k = 1; k <= d; ++k)
      for (const auto& w : enumerate_walks(d, n, k)) {
        auto lm = walk_leading_monomial(w, *ring);
        EXPECT_TRUE(std::any_of(reduced.begin(), reduced.end(), [&](const Monomial& r) { return r.divides(lm); }));
      }
  }
}

TEST(WalkLeadingMonomial, Examples) {
  auto r23 = Ring::coefficients(2, 3);
  auto idx = [&](int i, int j) { return r23->coefficient_index(i, j); };
  EXPECT_EQ(walk_leading_monomial({{{1, 0}, {2, 1}, {3, 2}}}, *r23),
            (Monomial{{idx(1, 0), 1}, {idx(2, 1), 1}, {idx(3, 2), 1}}));
  auto r12 = Ring::coefficients(1, 2);
  EXPECT_EQ(walk_leading_monomial({{{1, 0}, {2, 1}}}, *r12),
            (Monomial{{r12->coefficient_index(1, 0), 1}, {r12->coefficient_index(2, 1), 1}}));
  auto r22 = Ring::coefficients(2, 2);
  auto i2 = [&](int i, int j) { return r22->coefficient_index(i, j); };
  EXPECT_EQ(walk_leading_monomial({{{1, 0}, {2, 1}, {1, 1}, {2, 2}}}, *r22),
            (Monomial{{i2(1, 0), 1}, {i2(2, 1), 1}, {i2(1, 1), 1}, {i2(2, 2), 1}}));
}

TEST(Components, Examples) {
  EXPECT_EQ(components(2, 3).size(), 6u);
  auto s11 = coordinate_subspace(2, 3, 1, 1);
  EXPECT_EQ(s11.variables, (std::vector<VariableId>{VariableId::coefficient(2, 1), VariableId::coefficient(3, 1)}));
  auto s32 = coordinate_subspace(2, 3, 3, 2);
  EXPECT_EQ(s32.variables, (std::vector<VariableId>{VariableId::coefficient(1, 1), VariableId::coefficient(2, 1)}));
  EXPECT_THROW(coordinate_subspace(2, 3, 4, 1), ParameterOutOfRange);
}

TEST(Components, HittingSets) {
  for (auto [d, n] : kGrid) {
    auto ring = Ring::coefficients(d, n);
    std::vector<std::set<std::size_t>> walks;
    for (int k = 1; k <= d; ++k)
      for (const auto& w : enumerate_walks(d, n, k)) walks.push_back(vertex_set(w, *ring));
    auto hits = [&](const std::set<std::size_t>& s) {
      return std::all_of(walks.begin(), walks.end(), [&](const std::set<std::size_t>& w) {
        return std::any_of(w.begin(), w.end(), [&](std::size_t v) { return s.count(v) > 0; });
      });
    };
    for (const auto& c : components(d, n)) {
      std::set<std::size_t> s;
      for (const auto& v : c.variables) s.insert(ring->index_of(v));
      EXPECT_EQ(s.size(), static_cast<std::size_t>(n - 1));
      EXPECT_TRUE(hits(s));
      for (auto v : s) {
        auto smaller = s;
        smaller.erase(v);
        EXPECT_FALSE(hits(smaller));
      }
    }
  }
}
