#include "rforge/ordering.hpp"

#include "rforge/errors.hpp"
#include "rforge/minors.hpp"
#include "rforge/walks.hpp"

#include <algorithm>

namespace rforge {

std::int64_t DiagonalWeights::increment(int k, int l) const {
  if (k < 1 || k > n || l < 1 || l > d) throw ParameterOutOfRange("increment index out of range");
  return increments[static_cast<std::size_t>(k - 1) * d + (l - 1)];
}

std::int64_t DiagonalWeights::weight(int k, int l) const {
  if (k < 1 || k > n || l < 0 || l > d) throw ParameterOutOfRange("weight index out of range");
  return weights[static_cast<std::size_t>(k - 1) * (d + 1) + l];
}

DiagonalWeights build_diagonal_weights(int d, int n) {
  if (d < 1) throw ParameterOutOfRange("build_diagonal_weights: d must be >= 1");
  if (n < 2) throw ParameterOutOfRange("build_diagonal_weights: n must be >= 2");
  DiagonalWeights dw;
  dw.d = d;
  dw.n = n;
  dw.increments.resize(static_cast<std::size_t>(n) * d);
  dw.weights.resize(static_cast<std::size_t>(n) * (d + 1));
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= d; ++l) dw.increments[(k - 1) * d + (l - 1)] = static_cast<std::int64_t>(l - 1) * n + (n - k + 1);
  for (int k = 1; k <= n; ++k) {
    auto* w = &dw.weights[static_cast<std::size_t>(k - 1) * (d + 1)];
    w[d] = 1;
    for (int l = d - 1; l >= 0; --l) w[l] = w[l + 1] + dw.increment(k, l + 1);
  }
  return dw;
}

TermOrder diagonal_order(const DiagonalWeights& dw) { return diagonal_order(dw, Ring::coefficients(dw.d, dw.n)); }

TermOrder diagonal_order(const DiagonalWeights& dw, const RingPtr& ring) {
  if (ring->d() != dw.d || ring->n() != dw.n) throw RingMismatch("diagonal_order: ring parameters differ from weights");
  const std::size_t coeffs = ring->coefficient_count();
  std::vector<std::size_t> row_major(coeffs);
  for (std::size_t v = 0; v < coeffs; ++v) row_major[v] = v;
  std::vector<std::int64_t> weights(ring->size(), 0);
  for (std::size_t v = 0; v < coeffs; ++v) {
    auto id = ring->variable(v);
    weights[v] = dw.weight(id.i, id.j);
  }
  auto weighted = TermOrder::weighted(ring, std::move(weights), TermOrder::degrevlex(ring, row_major));
  if (ring->size() == coeffs) return weighted;
  std::vector<std::size_t> extras;
  for (std::size_t v = coeffs; v < ring->size(); ++v) extras.push_back(v);
  auto extra_order = TermOrder::degrevlex(ring, extras);
  return TermOrder::block(ring, extras, std::move(extra_order), std::move(weighted));
}

std::vector<std::size_t> column_major_ranking(const Ring& ring) {
  std::vector<std::size_t> ranking;
  for (int j = 0; j <= ring.d(); ++j)
    for (int i = 1; i <= ring.n(); ++i) ranking.push_back(ring.coefficient_index(i, j));
  for (std::size_t v = ring.coefficient_count(); v < ring.size(); ++v) ranking.push_back(v);
  return ranking;
}

TermOrder column_major_degrevlex(const RingPtr& ring) { return TermOrder::degrevlex(ring, column_major_ranking(*ring)); }

TermOrder column_major_lex(const RingPtr& ring) { return TermOrder::lex(ring, column_major_ranking(*ring)); }

std::size_t DiagonalReport::violations() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.matches; }));
}

bool DiagonalReport::strict_everywhere() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.strict_weight; });
}

DiagonalReport verify_diagonal_property(int d, int n) {
  auto dw = build_diagonal_weights(d, n);
  auto order = diagonal_order(dw);
  DiagonalReport report{d, n, {}};
  for (auto& rec : enumerate_generators(d, n)) {
    auto diagonal = walk_leading_monomial(rec.walk, *order.ring());
    auto lead = leading_term(rec.poly, order).monomial;
    const auto diag_weight = order.weight(diagonal);
    bool strict = true;
    bool found = false;
    for (const auto& t : rec.poly.terms()) {
      if (t.monomial == diagonal) {
        found = true;
        continue;
      }
      if (order.weight(t.monomial) >= diag_weight) strict = false;
    }
    report.checks.push_back({rec.k, rec.selection, diagonal, lead, found && lead == diagonal, strict && found});
  }
  return report;
}

}  // namespace rforge
