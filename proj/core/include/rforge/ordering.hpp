#pragma once

#include "rforge/cascade.hpp"
#include "rforge/monomial.hpp"
#include "rforge/term_order.hpp"

#include <cstdint>
#include <vector>

namespace rforge {

// Weights that make every maximal minor of every M_k lead with its diagonal.
//
// The increments x_{k,l} (1<=k<=n, 1<=l<=d) increase strictly along
//   x_{n,1} < x_{n-1,1} < ... < x_{1,1} < x_{n,2} < ... < x_{1,d}
// and the weights satisfy w_{k,d} = 1, w_{k,l} = w_{k,l+1} + x_{k,l+1}.
struct DiagonalWeights {
  int d = 0;
  int n = 0;
  std::vector<std::int64_t> increments;  // x_{k,l} at (k-1)*d + (l-1)
  std::vector<std::int64_t> weights;     // w_{k,l} at (k-1)*(d+1) + l

  std::int64_t increment(int k, int l) const;
  std::int64_t weight(int k, int l) const;
};

// Canonical instance: the increments are the consecutive integers 1..nd,
// x_{k,l} = (l-1)*n + (n-k+1).
DiagonalWeights build_diagonal_weights(int d, int n);

// Weighted order on the coefficient ring with a degrevlex tiebreak over the
// row-major ranking a_{1,0} > a_{1,1} > ... > a_{n,d}.
TermOrder diagonal_order(const DiagonalWeights& dw);
// Same weights on an extended ring: the extra variables (x, auxiliaries)
// form a degrevlex block ranked above every coefficient.
TermOrder diagonal_order(const DiagonalWeights& dw, const RingPtr& ring);

// Column-major ranking a_{1,0} > a_{2,0} > ... > a_{n,0} > a_{1,1} > ...,
// i.e. the a_1..a_n, b_1..b_n, c_1..c_n listing used by Macaulay2 sessions.
std::vector<std::size_t> column_major_ranking(const Ring& ring);
TermOrder column_major_degrevlex(const RingPtr& ring);
TermOrder column_major_lex(const RingPtr& ring);

struct DiagonalCheck {
  int k;
  RowSelection selection;
  Monomial diagonal;
  Monomial leading;
  bool matches;
  // Diagonal weight exceeds the weight of every other term.
  bool strict_weight;
};

struct DiagonalReport {
  int d;
  int n;
  std::vector<DiagonalCheck> checks;

  std::size_t violations() const;
  bool strict_everywhere() const;
  bool ok() const { return violations() == 0 && strict_everywhere(); }
};

// Leading term under diagonal_order versus the walk product, for every
// nonzero maximal minor of every M_k.
DiagonalReport verify_diagonal_property(int d, int n);

}  // namespace rforge
