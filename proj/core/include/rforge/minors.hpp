#pragma once

#include "rforge/cascade.hpp"
#include "rforge/polynomial.hpp"
#include "rforge/walks.hpp"

#include <optional>
#include <vector>

namespace rforge {

// One determinantal generator: a nonzero maximal minor of M_k.
struct GeneratorRecord {
  int k;
  RowSelection selection;
  MinorWalk walk;
  Polynomial poly;        // determinant with rows in lexicographic order
  Polynomial normalized;  // content-normalized copy
  int degree;             // d + k
};

// Determinant of the square submatrix on the selected rows (lexicographic
// order) and all columns. Selections with a zero on the diagonal return 0
// without expanding.
Polynomial minor_det(const CascadeMatrix& m, const RowSelection& sel);

// Laplace expansion of an arbitrary square polynomial matrix (row-major),
// expanding along the sparsest remaining column with memoisation on the
// remaining (row set, column set). At most 64 rows.
Polynomial laplace_determinant(const std::vector<std::vector<Polynomial>>& matrix, const RingPtr& ring);

// Nonzero maximal minors of M_k for every k in 1..d (or only the given k),
// ordered by k and then by row selection.
std::vector<GeneratorRecord> enumerate_generators(int d, int n, std::optional<int> only_k = std::nullopt);

// The records whose walks are reduced: the Groebner basis candidate G.
std::vector<GeneratorRecord> generators_for_basis(int d, int n);

std::vector<Polynomial> polys_of(const std::vector<GeneratorRecord>& records);

// Res(f_i, f_j) as the determinant of the classical 2d x 2d Sylvester matrix:
// d shifted copies of f_i's coefficients above d shifted copies of f_j's.
Polynomial sylvester_resultant(const RingPtr& ring, int i, int j);

}  // namespace rforge
