#pragma once

#include "rforge/cascade.hpp"
#include "rforge/minors.hpp"
#include "rforge/polynomial.hpp"
#include "rforge/univariate.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <vector>

namespace rforge {

// A specialisation of every a_{i,j} to a rational, n rows of d+1 entries.
class CoefficientTuple {
 public:
  CoefficientTuple(int d, int n);
  CoefficientTuple(int d, int n, std::vector<Rational> row_major);

  int d() const { return d_; }
  int n() const { return n_; }
  const Rational& at(int i, int j) const;
  Rational& at(int i, int j);
  // Values in the coefficient ring's variable order, for evaluate().
  const std::vector<Rational>& values() const { return values_; }
  UnivariatePolynomial polynomial(int i) const;
  bool all_zero() const;
  bool all_leading_zero() const;

  // {"d": .., "n": .., "values": [["num/den", ...], ...]}
  nlohmann::json to_json() const;
  static CoefficientTuple from_json(const nlohmann::json& j);

  bool operator==(const CoefficientTuple&) const = default;

 private:
  int d_;
  int n_;
  std::vector<Rational> values_;
};

struct RootReport {
  bool has_affine_common_root = false;
  bool all_leading_zero = false;
  int gcd_degree = 0;
  UnivariatePolynomial gcd;

  // The binary forms share a root in P^1.
  bool projective_common_root() const { return has_affine_common_root || all_leading_zero; }
};

// gcd over Q of the nonzero specialised f_i. Throws DegenerateInput when
// every coefficient is zero.
RootReport common_root_oracle(const CoefficientTuple& c);

// 64-bit LCG, state <- state * 6364136223846793005 + 1442695040888963407
// (mod 2^64), stepped once before every draw. Draws use the top 31 bits.
class Lcg64 {
 public:
  explicit Lcg64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  // Uniform on [lo, hi] via (top bits) mod (hi - lo + 1).
  int uniform(int lo, int hi);
  // num/den with num and den each uniform on [-20, 20] \ {0}.
  Rational small_rational();

 private:
  std::uint64_t state_;
};

struct PlantedSample {
  CoefficientTuple tuple;
  Rational root;
};

// Each f_i = (x - r) * q_i with r and the coefficients of q_i drawn from Lcg64.
PlantedSample sample_planted(int d, int n, std::uint64_t seed);
// Every a_{i,j} drawn independently.
CoefficientTuple sample_random(int d, int n, std::uint64_t seed);

// Specialisations for the rank cascade, cycling on seed % 5 through: all
// entries random; a planted common root; all a_{i,0} = 0; every f_i a
// multiple of f_1; f_n a combination of the other f_i.
CoefficientTuple sample_specialization(int d, int n, std::uint64_t seed);

struct PlantedVanishingReport {
  int d;
  int n;
  std::size_t generators = 0;
  std::vector<std::size_t> nonvanishing;  // indices into enumerate_generators(d, n)
  bool ok() const { return nonvanishing.empty(); }
};

// a_{i,0} = b_{i,0}, a_{i,j} = b_{i,j} - r b_{i,j-1}, a_{i,d} = -r b_{i,d-1}
// from the coefficient ring into Q[r, b_{i,j}]. Auxiliary names are "r" and
// "b_<i>_<j>" for 1 <= i <= n, 0 <= j <= d-1.
Assignment planted_assignment(int d, int n, const RingPtr& target);
RingPtr planted_ring(int d, int n);

// Substitutes the planted-root parametrisation into every generator.
PlantedVanishingReport planted_vanishing(int d, int n);

struct ScanReport {
  std::vector<bool> vanishes;  // per generator, in enumerate_generators order
  bool all_generators_vanish = false;
  bool top_minors_vanish = false;  // every 2d x 2d minor of M_d
  RootReport root;
  // top_minors_vanish == root.projective_common_root()
  bool consistent = false;
};

// Evaluates the generators of one (d, n) on coefficient tuples.
class MembershipScanner {
 public:
  MembershipScanner(int d, int n);

  int d() const { return d_; }
  int n() const { return n_; }
  const std::vector<GeneratorRecord>& generators() const { return generators_; }

  ScanReport scan(const CoefficientTuple& c) const;
  // Whether every maximal minor of M_k vanishes at c (vacuously true when
  // M_k has fewer rows than d + k).
  bool minors_vanish(const CoefficientTuple& c, int k) const;

 private:
  int d_;
  int n_;
  std::vector<GeneratorRecord> generators_;
};

ScanReport membership_scan(const CoefficientTuple& c);

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix specialize(const CascadeMatrix& m, const CoefficientTuple& c);
std::size_t exact_rank(RationalMatrix m);
// M_k (r^{d+k-1}, ..., r, 1)^t
std::vector<Rational> kernel_residual(const CascadeMatrix& m, const CoefficientTuple& c, const Rational& r);

struct RankCascadeCheck {
  int k;
  bool minors_k_vanish;
  bool minors_prev_vanish;
  bool rank_deficient_k;     // rank M_k < d + k
  bool rank_deficient_prev;  // rank M_{k-1} < d + k - 1
  bool holds() const {
    return (!minors_k_vanish || minors_prev_vanish) && (!rank_deficient_k || rank_deficient_prev) &&
           minors_k_vanish == rank_deficient_k && minors_prev_vanish == rank_deficient_prev;
  }
};

// For k = 2..d: vanishing of all maximal minors of M_k forces vanishing of
// all maximal minors of M_{k-1}; cross-checked against exact ranks.
std::vector<RankCascadeCheck> rank_cascade(const MembershipScanner& scanner, const CoefficientTuple& c);

struct SamplingReport {
  int d = 0;
  int n = 0;
  std::size_t samples = 0;
  std::size_t eligible = 0;             // samples the claim says something about
  std::vector<std::uint64_t> failures;  // seeds
  bool ok() const { return failures.empty(); }
};

// Seeds seed, seed+1, ..., seed+samples-1 throughout.
// Planted tuples: every generator vanishes and M_k (r^{d+k-1}, ..., 1)^t = 0.
SamplingReport planted_sampling(int d, int n, std::size_t samples, std::uint64_t seed);
// Random tuples without a projective common root: some 2d x 2d minor of M_d
// is nonzero. Tuples with a root are counted but not eligible.
SamplingReport nonplanted_sampling(int d, int n, std::size_t samples, std::uint64_t seed);
// sample_specialization tuples: every rank_cascade check holds. Eligible
// counts the (sample, k) pairs where the M_k minors all vanish.
SamplingReport rank_cascade_sampling(int d, int n, std::size_t samples, std::uint64_t seed);

// Randomised search for a tuple whose M_1 maximal minors all vanish although
// the forms share no projective root (needs 2 <= n <= d + 1).
std::optional<CoefficientTuple> search_m1_insufficiency(int d, int n, std::uint64_t seed, int attempts);

}  // namespace rforge
