#pragma once

// Slow, definitional reference implementations. Nothing here calls into the
// walk enumerator or the Laplace engine.

#include "rforge/cascade.hpp"
#include "rforge/polynomial.hpp"
#include "rforge/walks.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

using rforge::Polynomial;
using rforge::RingPtr;
using PolyMatrix = std::vector<std::vector<Polynomial>>;

inline int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

inline Polynomial leibniz_determinant(const PolyMatrix& m, const RingPtr& ring) {
  const int size = static_cast<int>(m.size());
  std::vector<int> perm(size);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial det(ring);
  do {
    Polynomial term = Polynomial::constant(ring, permutation_sign(perm));
    bool zero = false;
    for (int r = 0; r < size && !zero; ++r) {
      if (m[r][perm[r]].is_zero())
        zero = true;
      else
        term = term * m[r][perm[r]];
    }
    if (!zero) det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// The textbook Sylvester matrix of f_i and f_j, expanded by permutations.
inline Polynomial sylvester_resultant(const RingPtr& ring, int i, int j) {
  const int d = ring->d();
  PolyMatrix m(2 * d, std::vector<Polynomial>(2 * d, Polynomial(ring)));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c <= d; ++c) {
      m[r][r + c] = Polynomial::variable(ring, rforge::VariableId::coefficient(i, c));
      m[d + r][r + c] = Polynomial::variable(ring, rforge::VariableId::coefficient(j, c));
    }
  return leibniz_determinant(m, ring);
}

inline PolyMatrix submatrix(const rforge::CascadeMatrix& m, const std::vector<int>& rows) {
  PolyMatrix out;
  for (int r : rows) {
    std::vector<Polynomial> row;
    for (int c = 1; c <= m.cols(); ++c) row.push_back(m.entry(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

// All (d+k)-subsets of rows of M_k (1-based, increasing) with nonzero
// Leibniz determinant.
inline std::vector<std::vector<int>> nonzero_selections(const rforge::CascadeMatrix& m) {
  std::vector<std::vector<int>> out;
  const int rows = m.rows();
  const int size = m.cols();
  if (rows < size) return out;
  std::vector<bool> pick(rows, false);
  std::fill(pick.begin(), pick.begin() + size, true);
  do {
    std::vector<int> sel;
    for (int r = 0; r < rows; ++r)
      if (pick[r]) sel.push_back(r + 1);
    if (!leibniz_determinant(submatrix(m, sel), m.ring()).is_zero()) out.push_back(sel);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Minor-walk conditions read straight off the definition.
inline bool is_minor_walk(const std::vector<rforge::LatticePoint>& w, int d, int n) {
  if (w.size() < 2) return false;
  for (const auto& p : w)
    if (p.u < 1 || p.u > n || p.v < 0 || p.v > d) return false;
  if (w.front().v != 0 || w.back().v != d) return false;
  for (std::size_t s = 1; s < w.size(); ++s) {
    const bool back_or_flat = w[s].v <= w[s - 1].v;
    const bool up_right = w[s].v == w[s - 1].v + 1 && w[s].u > w[s - 1].u;
    if (!back_or_flat && !up_right) return false;
  }
  return true;
}

// A minor walk with no proper subsequence that is again a minor walk.
inline bool is_reduced_by_definition(const std::vector<rforge::LatticePoint>& w, int d, int n) {
  if (!is_minor_walk(w, d, n)) return false;
  const std::size_t full = (std::size_t{1} << w.size()) - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::vector<rforge::LatticePoint> sub;
    for (std::size_t s = 0; s < w.size(); ++s)
      if (mask >> s & 1) sub.push_back(w[s]);
    if (is_minor_walk(sub, d, n)) return false;
  }
  return true;
}

// Every sequence of lattice points of the given length that is a minor walk.
inline std::vector<std::vector<rforge::LatticePoint>> all_minor_walks(int d, int n, int length) {
  std::vector<std::vector<rforge::LatticePoint>> out;
  std::vector<rforge::LatticePoint> cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == length) {
      if (is_minor_walk(cur, d, n)) out.push_back(cur);
      return;
    }
    for (int u = 1; u <= n; ++u)
      for (int v = 0; v <= d; ++v) {
        cur.push_back({u, v});
        // Prefix check keeps the search small.
        bool ok = cur.front().v == 0;
        const auto s = cur.size() - 1;
        if (ok && s > 0)
          ok = cur[s].v <= cur[s - 1].v || (cur[s].v == cur[s - 1].v + 1 && cur[s].u > cur[s - 1].u);
        if (ok) self(self);
        cur.pop_back();
      }
  };
  rec(rec);
  return out;
}

}  // namespace oracle
