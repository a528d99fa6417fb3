#pragma once

#include "rforge/polynomial.hpp"
#include "rforge/term_order.hpp"

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rforge {

// Bounds for a Buchberger run. Crossing any of them raises
// ResourceExhausted; a run never returns a truncated basis.
struct GroebnerLimits {
  std::size_t max_pairs = 1'000'000;
  std::size_t max_basis = 5'000;
  std::optional<int> max_degree;
  std::optional<std::chrono::milliseconds> timeout;
  // Re-check every S-polynomial of the output basis before returning.
  bool self_check = true;

  // Defaults overridden by RESULTANT_FORGE_LIMITS, a comma-separated list of
  // max_pairs=N, max_basis=N, max_degree=N, timeout_ms=N.
  static GroebnerLimits from_environment();
  static GroebnerLimits parse(const std::string& text);
  static GroebnerLimits parse(const std::string& text, GroebnerLimits base);
};

struct GroebnerStats {
  std::size_t pairs_total = 0;
  std::size_t pairs_reduced = 0;
  std::size_t product_skips = 0;
  std::size_t chain_skips = 0;
  std::size_t zero_reductions = 0;
};

struct IdealPresentation {
  RingPtr ring;
  std::vector<Polynomial> generators;
  TermOrder order;
  std::optional<std::vector<Polynomial>> certified_basis;
  GroebnerStats stats;
};

Polynomial s_polynomial(const Polynomial& p, const Polynomial& q, const TermOrder& order);

// Buchberger with the normal pair-selection strategy (smallest lcm degree,
// then lowest indices) and the product and chain criteria. The returned basis
// is minimal, inter-reduced, content-normalized and sorted by increasing
// leading monomial, so equal ideals give syntactically equal bases.
IdealPresentation buchberger(const std::vector<Polynomial>& generators, const TermOrder& order,
                             const GroebnerLimits& limits = {});

struct CertificationReport {
  std::size_t pairs_checked = 0;
  std::vector<std::pair<std::size_t, std::size_t>> failures;  // S-pairs with nonzero remainder
  bool ok() const { return failures.empty(); }
};

// Reduces every S-polynomial of basis (all pairs, no criteria) modulo basis.
CertificationReport certify_groebner(const std::vector<Polynomial>& basis, const TermOrder& order);

// Minimal generators of the ideal spanned by the leading monomials.
std::vector<Monomial> initial_ideal_generators(const std::vector<Polynomial>& basis, const TermOrder& order);

// Groebner basis of <f_1, ..., f_n> under the block order with x above every
// coefficient (degrevlex on the coefficients in row-major ranking), restricted
// to the coefficient subring. The result lives in Ring::coefficients(d, n)
// and is certified under that degrevlex order.
IdealPresentation eliminate_x(int d, int n, const GroebnerLimits& limits = {});

// The generic system f_i = sum_j a_{i,j} x^{d-j} in a ring with x.
std::vector<Polynomial> generic_system(const RingPtr& ring_with_x);

// Certifies both presentations if necessary, then tests mutual membership.
bool ideal_equal(IdealPresentation& a, IdealPresentation& b, const GroebnerLimits& limits = {});
bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b, const GroebnerLimits& limits = {});

// a subset of ideal(basis) for a certified basis.
bool contained_in(const std::vector<Polynomial>& polys, const std::vector<Polynomial>& basis, const TermOrder& order);

struct ChartReport {
  bool equal = false;
  std::size_t j_generators = 0;
  std::size_t i_generators = 0;
  std::size_t j_basis = 0;
  std::size_t i_basis = 0;
  bool j_in_i = false;
  bool i_in_j = false;
};

// Compares the ideal J of all 2d x 2d minors of M_d with the ideal I of all
// minors of M_1..M_d after setting a_{1,0} = 1.
ChartReport chart_equal(int d, int n, const GroebnerLimits& limits = {});

}  // namespace rforge
