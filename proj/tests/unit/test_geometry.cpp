#include "rforge/errors.hpp"
#include "rforge/geometry.hpp"
#include "rforge/verify.hpp"
#include "rforge/walks.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <set>

using namespace rforge;

namespace {

SquareFreeMonomialIdeal lead_ideal(int d, int n) {
  auto ring = Ring::coefficients(d, n);
  std::vector<Monomial> leads;
  for (const auto& w : enumerate_reduced(d, n)) leads.push_back(walk_leading_monomial(w, *ring));
  return SquareFreeMonomialIdeal(leads);
}

std::set<std::vector<std::size_t>> subspaces(int d, int n) {
  auto ring = Ring::coefficients(d, n);
  std::set<std::vector<std::size_t>> out;
  for (const auto& c : components(d, n)) {
    std::vector<std::size_t> vars;
    for (const auto& v : c.variables) vars.push_back(ring->index_of(v));
    std::sort(vars.begin(), vars.end());
    out.insert(vars);
  }
  return out;
}

}  // namespace

TEST(MinimalPrimes, Product) {
  SquareFreeMonomialIdeal xy({Monomial{{0, 1}, {1, 1}}});
  auto primes = minimal_primes(xy);
  EXPECT_EQ(primes, (std::vector<std::vector<std::size_t>>{{0}, {1}}));
  auto dd = dim_and_degree(xy, 2);
  EXPECT_EQ(dd.dimension, 0);
  EXPECT_EQ(dd.degree, 2);
}

TEST(MinimalPrimes, RejectsSquares) {
  EXPECT_THROW(SquareFreeMonomialIdeal({Monomial{{0, 2}}}), ParameterOutOfRange);
}

TEST(MinimalPrimes, SmallestCase) {
  auto ring = Ring::coefficients(1, 2);
  auto primes = minimal_primes(lead_ideal(1, 2));
  std::vector<std::vector<std::size_t>> expected{{ring->coefficient_index(1, 0)}, {ring->coefficient_index(2, 1)}};
  EXPECT_EQ(primes, expected);
  auto dd = dim_and_degree(lead_ideal(1, 2), ring->size());
  EXPECT_EQ(dd.dimension, 2);
  EXPECT_EQ(dd.degree, 2);
}

TEST(MinimalPrimes, CoordinateSubspacesOnGrid) {
  for (auto [d, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}}) {
    auto ideal = lead_ideal(d, n);
    auto primes = minimal_primes(ideal);
    std::set<std::vector<std::size_t>> found(primes.begin(), primes.end());
    EXPECT_EQ(found, subspaces(d, n)) << d << "," << n;
    EXPECT_EQ(primes.size(), static_cast<std::size_t>(n * d));
    for (const auto& p : primes) EXPECT_EQ(p.size(), static_cast<std::size_t>(n - 1));
    auto dd = dim_and_degree(ideal, static_cast<std::size_t>(n * (d + 1)));
    EXPECT_EQ(dd.dimension, n * d);
    EXPECT_EQ(dd.degree, n * d);
    EXPECT_TRUE(dd.equidimensional);
  }
}

TEST(MinimalPrimes, CoversAreMinimalAndIncomparable) {
  Lcg64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Monomial> gens;
    const int count = rng.uniform(1, 6);
    for (int g = 0; g < count; ++g) {
      MonomialBuilder b;
      for (std::size_t v = 0; v < 8; ++v)
        if (rng.uniform(0, 2) == 0) b.multiply(v);
      auto m = b.build();
      if (!m.is_one()) gens.push_back(m);
    }
    if (gens.empty()) continue;
    SquareFreeMonomialIdeal ideal(gens);
    auto primes = minimal_primes(ideal);
    auto hits = [&](const std::vector<std::size_t>& s) {
      return std::all_of(ideal.generators().begin(), ideal.generators().end(), [&](const Monomial& m) {
        return std::any_of(s.begin(), s.end(), [&](std::size_t v) { return m.exponent(v) > 0; });
      });
    };
    // Brute force over all subsets of the 8 variables.
    std::set<std::vector<std::size_t>> brute;
    for (unsigned mask = 0; mask < 256; ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t v = 0; v < 8; ++v)
        if (mask >> v & 1) s.push_back(v);
      if (!hits(s)) continue;
      bool minimal = true;
      for (std::size_t drop = 0; drop < s.size() && minimal; ++drop) {
        auto t = s;
        t.erase(t.begin() + static_cast<std::ptrdiff_t>(drop));
        minimal = !hits(t);
      }
      if (minimal) brute.insert(s);
    }
    EXPECT_EQ(std::set<std::vector<std::size_t>>(primes.begin(), primes.end()), brute);
    for (std::size_t i = 0; i < primes.size(); ++i)
      for (std::size_t j = 0; j < primes.size(); ++j)
        if (i != j)
          EXPECT_FALSE(std::includes(primes[j].begin(), primes[j].end(), primes[i].begin(), primes[i].end()));
  }
}

TEST(DimAndDegree, NonEquidimensional) {
  // <xy, xz> = <x> and <y, z>
  SquareFreeMonomialIdeal ideal({Monomial{{0, 1}, {1, 1}}, Monomial{{0, 1}, {2, 1}}});
  auto dd = dim_and_degree(ideal, 3);
  EXPECT_EQ(dd.dimension, 1);
  EXPECT_EQ(dd.degree, 1);
  EXPECT_FALSE(dd.equidimensional);
}

TEST(ChowDegree, Examples) {
  EXPECT_EQ(chow_degree(std::vector<int>{2, 2, 2}), 6);
  EXPECT_EQ(chow_degree(std::vector<int>{1, 1}), 2);
  EXPECT_EQ(chow_degree(std::vector<int>{2, 3, 5}), 10);
  EXPECT_THROW(chow_degree(std::vector<int>{3}), ParameterOutOfRange);
  EXPECT_THROW(chow_degree(std::vector<int>{2, 0}), ParameterOutOfRange);
}

TEST(ChowDegree, RandomTuples) {
  Lcg64 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> degrees(rng.uniform(2, 6));
    for (auto& d : degrees) d = rng.uniform(1, 9);
    EXPECT_EQ(chow_degree(degrees), std::accumulate(degrees.begin(), degrees.end(), 0));
  }
}

TEST(ChowClass, Truncation) {
  auto h1 = ChowClass::h1(3), h2 = ChowClass::h2(3);
  EXPECT_EQ((h1 * h1).coefficient(0, 0), 0);
  auto top = h1 * h2 * h2 * h2;
  EXPECT_EQ(top.coefficient(1, 3), 1);
  EXPECT_EQ((top * h2).coefficient(1, 3), 0);
  auto sum = (h1.scale(2) + h2) * (h1 + h2);
  EXPECT_EQ(sum.coefficient(1, 1), 3);
  EXPECT_EQ(sum.coefficient(0, 2), 1);
}
