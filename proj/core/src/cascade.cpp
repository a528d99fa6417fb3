#include "rforge/cascade.hpp"

#include "rforge/errors.hpp"

#include <string>

namespace rforge {

namespace {

void check_parameters(int d, int n, int k) {
  if (d < 1) throw ParameterOutOfRange("cascade: d must be >= 1");
  if (n < 2) throw ParameterOutOfRange("cascade: n must be >= 2");
  if (k < 1 || k > d) throw ParameterOutOfRange("cascade: k must satisfy 1 <= k <= d");
}

}  // namespace

CascadeMatrix::CascadeMatrix(int d, int n, int k) : d_(d), n_(n), k_(k) {
  check_parameters(d, n, k);
  ring_ = Ring::coefficients(d, n);
  entries_.reserve(static_cast<std::size_t>(rows()) * cols());
  for (int row = 1; row <= rows(); ++row) {
    auto lab = label(row);
    for (int col = 1; col <= cols(); ++col) {
      auto v = variable_at(lab, col);
      entries_.push_back(v ? Polynomial::variable(ring_, *v) : Polynomial(ring_));
    }
  }
}

const Polynomial& CascadeMatrix::entry(int row, int col) const {
  if (row < 1 || row > rows() || col < 1 || col > cols()) throw ParameterOutOfRange("cascade: entry out of range");
  return entries_[static_cast<std::size_t>(row - 1) * cols() + (col - 1)];
}

RowLabel CascadeMatrix::label(int row) const {
  if (row < 1 || row > rows()) throw ParameterOutOfRange("cascade: row out of range");
  return {(row - 1) / n_ + 1, (row - 1) % n_ + 1};
}

int CascadeMatrix::row_of(RowLabel lab) const {
  if (lab.block < 1 || lab.block > k_ || lab.poly < 1 || lab.poly > n_)
    throw ParameterOutOfRange("cascade: row label out of range");
  return (lab.block - 1) * n_ + lab.poly;
}

std::vector<RowLabel> CascadeMatrix::labels() const {
  std::vector<RowLabel> out;
  for (int row = 1; row <= rows(); ++row) out.push_back(label(row));
  return out;
}

std::optional<VariableId> CascadeMatrix::variable_at(RowLabel lab, int col) const {
  int shift = col - lab.block;
  if (shift < 0 || shift > d_) return std::nullopt;
  return VariableId::coefficient(lab.poly, shift);
}

CascadeMatrix build_cascade(int d, int n, int k) { return CascadeMatrix(d, n, k); }

std::vector<RowEntry> row_entries(const CascadeMatrix& m, int i, int j) {
  if (i < 1 || i > m.k() || j < 1 || j > m.n()) throw ParameterOutOfRange("row_entries: row index out of range");
  std::vector<RowEntry> out;
  for (int c = i; c <= i + m.d(); ++c) out.push_back({c, VariableId::coefficient(j, c - i)});
  return out;
}

RowSelection::RowSelection(int d, int n, int k, std::vector<RowLabel> rows) : d_(d), n_(n), k_(k), rows_(std::move(rows)) {
  check_parameters(d, n, k);
  if (rows_.size() != static_cast<std::size_t>(d + k))
    throw ParameterOutOfRange("row selection must contain exactly d+k = " + std::to_string(d + k) + " rows");
  for (std::size_t s = 0; s < rows_.size(); ++s) {
    const auto& r = rows_[s];
    if (r.block < 1 || r.block > k || r.poly < 1 || r.poly > n)
      throw ParameterOutOfRange("row selection: label out of range");
    if (s > 0 && !(rows_[s - 1] < r))
      throw ParameterOutOfRange("row selection must be strictly increasing in lexicographic order");
  }
}

RowSelection RowSelection::all_rows(const CascadeMatrix& m) {
  return RowSelection(m.d(), m.n(), m.k(), m.labels());
}

}  // namespace rforge
