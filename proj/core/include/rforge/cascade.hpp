#pragma once

#include "rforge/polynomial.hpp"
#include "rforge/ring.hpp"

#include <compare>
#include <vector>

namespace rforge {

// Row label (i, j) of M_k: block i in 1..k, polynomial j in 1..n.
struct RowLabel {
  int block;
  int poly;

  bool operator==(const RowLabel&) const = default;
  auto operator<=>(const RowLabel&) const = default;
};

struct RowEntry {
  int column;  // 1-based
  VariableId variable;

  bool operator==(const RowEntry&) const = default;
};

// The nk x (d+k) cascading matrix M_k: k copies of the n x (d+1) coefficient
// block, each shifted one column to the right of the one above it. Row (i, j)
// sits at 0-based position (i-1)*n + (j-1) and carries a_{j,c-i} in column c.
class CascadeMatrix {
 public:
  CascadeMatrix(int d, int n, int k);

  int d() const { return d_; }
  int n() const { return n_; }
  int k() const { return k_; }
  int rows() const { return n_ * k_; }
  int cols() const { return d_ + k_; }
  const RingPtr& ring() const { return ring_; }

  // 1-based row/column, as in the mathematical indexing.
  const Polynomial& entry(int row, int col) const;
  RowLabel label(int row) const;
  int row_of(RowLabel label) const;
  std::vector<RowLabel> labels() const;

  // Variable at (row label, column), or nullopt for a structural zero.
  std::optional<VariableId> variable_at(RowLabel label, int col) const;

 private:
  int d_;
  int n_;
  int k_;
  RingPtr ring_;
  std::vector<Polynomial> entries_;  // row-major
};

CascadeMatrix build_cascade(int d, int n, int k);

// The d+1 nonzero entries of row (i, j): columns i..i+d carrying a_{j,0}..a_{j,d}.
std::vector<RowEntry> row_entries(const CascadeMatrix& m, int i, int j);

// Lexicographically increasing list of d+k distinct rows of M_k.
class RowSelection {
 public:
  RowSelection(int d, int n, int k, std::vector<RowLabel> rows);

  // The full row set when nk = d+k.
  static RowSelection all_rows(const CascadeMatrix& m);

  int d() const { return d_; }
  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<RowLabel>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }

  bool operator==(const RowSelection&) const = default;

 private:
  int d_;
  int n_;
  int k_;
  std::vector<RowLabel> rows_;
};

}  // namespace rforge
