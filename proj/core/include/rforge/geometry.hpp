#pragma once

#include "rforge/monomial.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rforge {

// Ideal generated by square-free monomials. Construction drops generators
// divisible by another generator.
class SquareFreeMonomialIdeal {
 public:
  explicit SquareFreeMonomialIdeal(std::vector<Monomial> generators);

  const std::vector<Monomial>& generators() const { return generators_; }

 private:
  std::vector<Monomial> generators_;
};

// Inclusion-minimal sets of variables meeting the support of every
// generator, i.e. the minimal primes (coordinate subspace components) of V(I).
// Each set is sorted; the list is sorted lexicographically.
std::vector<std::vector<std::size_t>> minimal_primes(const SquareFreeMonomialIdeal& ideal);

struct DimensionDegree {
  int dimension;  // projective
  int degree;     // number of top-dimensional components
  bool equidimensional;
};

// For a union of coordinate subspaces in P^{ambient-1}.
DimensionDegree dim_and_degree(const SquareFreeMonomialIdeal& ideal, std::size_t ambient);

// Element of Z[H_1, H_2] / (H_1^2, H_2^{top+1}).
class ChowClass {
 public:
  explicit ChowClass(int top);  // zero class

  static ChowClass constant(int top, std::int64_t c);
  static ChowClass h1(int top);
  static ChowClass h2(int top);

  int top() const { return top_; }
  // Coefficient of H_1^a H_2^b (a in {0,1}, 0 <= b <= top).
  std::int64_t coefficient(int a, int b) const;

  ChowClass operator+(const ChowClass& other) const;
  ChowClass operator*(const ChowClass& other) const;
  ChowClass scale(std::int64_t c) const;

 private:
  int top_;
  std::vector<std::int64_t> coeffs_;  // index a*(top+1) + b
};

// Degree of the common-root locus for forms of degrees d_1..d_n: the
// coefficient of H_1 H_2^{n-1+D} in H_2^D prod (d_i H_1 + H_2) inside the
// Chow ring of P^1 x P^{n-1+D}, with D = sum d_i.
std::int64_t chow_degree(std::span<const int> degrees);

}  // namespace rforge
