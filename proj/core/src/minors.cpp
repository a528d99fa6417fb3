#include "rforge/minors.hpp"

#include "rforge/errors.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

namespace rforge {

namespace {

struct MaskKey {
  std::uint64_t rows;
  std::uint64_t cols;
  bool operator==(const MaskKey&) const = default;
};

struct MaskKeyHash {
  std::size_t operator()(const MaskKey& k) const {
    return std::hash<std::uint64_t>{}(k.rows * 0x9e3779b97f4a7c15ULL ^ k.cols);
  }
};

class LaplaceExpander {
 public:
  LaplaceExpander(const std::vector<std::vector<Polynomial>>& matrix, RingPtr ring)
      : matrix_(matrix), ring_(std::move(ring)) {}

  Polynomial det(std::uint64_t rows, std::uint64_t cols) {
    if (rows == 0) return Polynomial::constant(ring_, 1);
    MaskKey key{rows, cols};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Sparsest remaining column, leftmost on ties.
    int best_col = -1;
    int best_count = 1 << 30;
    for (std::uint64_t c = cols; c != 0; c &= c - 1) {
      int col = std::countr_zero(c);
      int count = 0;
      for (std::uint64_t r = rows; r != 0; r &= r - 1)
        if (!matrix_[std::countr_zero(r)][col].is_zero()) ++count;
      if (count < best_count) {
        best_count = count;
        best_col = col;
      }
    }

    Polynomial total(ring_);
    if (best_count > 0) {
      const int col_pos = std::popcount(cols & ((std::uint64_t{1} << best_col) - 1));
      const std::uint64_t sub_cols = cols & ~(std::uint64_t{1} << best_col);
      int row_pos = 0;
      for (std::uint64_t r = rows; r != 0; r &= r - 1, ++row_pos) {
        int row = std::countr_zero(r);
        const auto& entry = matrix_[row][best_col];
        if (entry.is_zero()) continue;
        auto minor = det(rows & ~(std::uint64_t{1} << row), sub_cols);
        if (minor.is_zero()) continue;
        auto term = entry * minor;
        total = ((row_pos + col_pos) % 2 == 0) ? total + term : total - term;
      }
    }
    memo_.emplace(key, total);
    return total;
  }

 private:
  const std::vector<std::vector<Polynomial>>& matrix_;
  RingPtr ring_;
  std::unordered_map<MaskKey, Polynomial, MaskKeyHash> memo_;
};

}  // namespace

Polynomial laplace_determinant(const std::vector<std::vector<Polynomial>>& matrix, const RingPtr& ring) {
  const std::size_t size = matrix.size();
  if (size > 64) throw ParameterOutOfRange("laplace_determinant: at most 64 rows");
  for (const auto& row : matrix) {
    if (row.size() != size) throw ParameterOutOfRange("laplace_determinant: matrix must be square");
    for (const auto& e : row) require_same_ring(e.ring(), ring, "laplace_determinant");
  }
  if (size == 0) return Polynomial::constant(ring, 1);
  const std::uint64_t full = (size == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << size) - 1);
  LaplaceExpander expander(matrix, ring);
  return expander.det(full, full);
}

Polynomial minor_det(const CascadeMatrix& m, const RowSelection& sel) {
  if (sel.d() != m.d() || sel.n() != m.n() || sel.k() != m.k())
    throw ParameterOutOfRange("minor_det: selection does not belong to this matrix");
  if (!try_rows_to_walk(sel)) return Polynomial(m.ring());
  std::vector<std::vector<Polynomial>> sub;
  sub.reserve(sel.size());
  for (const auto& lab : sel.rows()) {
    const int row = m.row_of(lab);
    std::vector<Polynomial> line;
    line.reserve(m.cols());
    for (int col = 1; col <= m.cols(); ++col) line.push_back(m.entry(row, col));
    sub.push_back(std::move(line));
  }
  return laplace_determinant(sub, m.ring());
}

std::vector<GeneratorRecord> enumerate_generators(int d, int n, std::optional<int> only_k) {
  if (d < 1) throw ParameterOutOfRange("enumerate_generators: d must be >= 1");
  if (n < 2) throw ParameterOutOfRange("enumerate_generators: n must be >= 2");
  if (only_k && (*only_k < 1 || *only_k > d))
    throw ParameterOutOfRange("enumerate_generators: k must satisfy 1 <= k <= d");
  std::vector<GeneratorRecord> out;
  for (int k = 1; k <= d; ++k) {
    if (only_k && k != *only_k) continue;
    if (n * k < d + k) continue;  // no maximal minors of that size
    auto m = build_cascade(d, n, k);
    for (auto& walk : enumerate_walks(d, n, k)) {
      auto sel = walk_to_rows(walk, d, n);
      auto poly = minor_det(m, sel);
      auto normalized = content_normalize(poly);
      out.push_back({k, std::move(sel), std::move(walk), std::move(poly), std::move(normalized), d + k});
    }
  }
  return out;
}

std::vector<GeneratorRecord> generators_for_basis(int d, int n) {
  auto all = enumerate_generators(d, n);
  std::vector<GeneratorRecord> out;
  for (auto& rec : all)
    if (is_reduced(rec.walk.steps, d, n)) out.push_back(std::move(rec));
  return out;
}

std::vector<Polynomial> polys_of(const std::vector<GeneratorRecord>& records) {
  std::vector<Polynomial> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.poly);
  return out;
}

Polynomial sylvester_resultant(const RingPtr& ring, int i, int j) {
  const int d = ring->d();
  if (i < 1 || j < 1 || i > ring->n() || j > ring->n() || i == j)
    throw ParameterOutOfRange("sylvester_resultant: need two distinct polynomial indices");
  const int size = 2 * d;
  std::vector<std::vector<Polynomial>> rows(size, std::vector<Polynomial>(size, Polynomial(ring)));
  for (int r = 0; r < size; ++r) {
    const int poly = r < d ? i : j;
    const int shift = r % d;
    for (int c = 0; c <= d; ++c)
      rows[r][shift + c] = Polynomial::variable(ring, VariableId::coefficient(poly, c));
  }
  return laplace_determinant(rows, ring);
}

}  // namespace rforge
