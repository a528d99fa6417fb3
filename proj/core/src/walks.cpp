#include "rforge/walks.hpp"

#include "rforge/errors.hpp"

#include <algorithm>

namespace rforge {

namespace {

void check_dn(int d, int n) {
  if (d < 1) throw ParameterOutOfRange("walks: d must be >= 1");
  if (n < 2) throw ParameterOutOfRange("walks: n must be >= 2");
}

bool in_lattice(const LatticePoint& p, int d, int n) { return p.u >= 1 && p.u <= n && p.v >= 0 && p.v <= d; }

bool legal_step(const LatticePoint& from, const LatticePoint& to) {
  return to.v <= from.v || (to.v == from.v + 1 && to.u > from.u);
}

}  // namespace

std::optional<MinorWalk> try_rows_to_walk(const RowSelection& sel) {
  MinorWalk w;
  w.steps.reserve(sel.size());
  int s = 1;
  for (const auto& row : sel.rows()) {
    LatticePoint p{row.poly, s - row.block};
    if (!in_lattice(p, sel.d(), sel.n())) return std::nullopt;
    w.steps.push_back(p);
    ++s;
  }
  return w;
}

MinorWalk rows_to_walk(const RowSelection& sel) {
  auto w = try_rows_to_walk(sel);
  if (!w) throw ZeroMinor("row selection has a zero on its diagonal; its minor vanishes identically");
  return *w;
}

RowSelection walk_to_rows(const MinorWalk& w, int d, int n) {
  int k = static_cast<int>(w.length()) - d;
  std::vector<RowLabel> rows;
  rows.reserve(w.length());
  int s = 1;
  for (const auto& p : w.steps) {
    rows.push_back({s - p.v, p.u});
    ++s;
  }
  return RowSelection(d, n, k, std::move(rows));
}

bool is_minor_walk(std::span<const LatticePoint> steps, int d, int n) {
  if (steps.empty()) return false;
  for (const auto& p : steps)
    if (!in_lattice(p, d, n)) return false;
  if (steps.front().v != 0 || steps.back().v != d) return false;
  for (std::size_t s = 1; s < steps.size(); ++s)
    if (!legal_step(steps[s - 1], steps[s])) return false;
  return true;
}

bool is_reduced(std::span<const LatticePoint> steps, int d, int n) {
  if (!is_minor_walk(steps, d, n)) return false;
  const std::size_t len = steps.size();
  if (len < 2) return false;
  // 0-based below: v[1] is v_2, v[len-2] is v_{L-1}.
  for (std::size_t s = 0; s + 1 < len; ++s)
    if (steps[s + 1].v < steps[s].v) return false;
  if (steps[1].v != 1 || steps[len - 2].v != d - 1) return false;
  for (std::size_t s = 0; s + 1 < len; ++s) {
    if (steps[s + 1].v != steps[s].v) continue;
    if (s == 0 || s + 2 >= len) return false;
    if (steps[s].v != steps[s - 1].v + 1) return false;
    // Otherwise step s could be skipped by climbing straight to s+1.
    if (steps[s + 1].u > steps[s - 1].u) return false;
    if (steps[s + 2].v != steps[s + 1].v + 1) return false;
    if (steps[s + 2].u > steps[s].u) return false;
  }
  return true;
}

std::vector<MinorWalk> enumerate_walks(int d, int n, int k) {
  check_dn(d, n);
  if (k < 1 || k > d) throw ParameterOutOfRange("enumerate_walks: k must satisfy 1 <= k <= d");
  const int len = d + k;
  std::vector<MinorWalk> out;
  std::vector<LatticePoint> path;
  path.reserve(len);

  // s is the 1-based index of the step being chosen.
  auto extend = [&](auto&& self, int s) -> void {
    if (s > len) {
      if (path.back().v == d) out.push_back({path});
      return;
    }
    const LatticePoint prev = path.back();
    const int low = std::max(0, s - k);
    const int high = std::min({d, s - 1, prev.v + 1});
    // Descending v gives ascending block index i = s - v, so walks come out in
    // lexicographic order of their row selections.
    for (int v = high; v >= low; --v) {
      for (int u = 1; u <= n; ++u) {
        LatticePoint p{u, v};
        if (!legal_step(prev, p)) continue;
        path.push_back(p);
        self(self, s + 1);
        path.pop_back();
      }
    }
  };

  for (int u = 1; u <= n; ++u) {
    path.push_back({u, 0});
    extend(extend, 2);
    path.pop_back();
  }
  return out;
}

std::vector<MinorWalk> enumerate_reduced(int d, int n) {
  check_dn(d, n);
  std::vector<MinorWalk> out;
  std::vector<LatticePoint> path;

  for (int len = d + 1; len <= 2 * d; ++len) {
    const int k = len - d;
    // s is the 0-based index of the step being chosen.
    auto extend = [&](auto&& self, int s) -> void {
      if (s == len) {
        if (path[len - 1].v == d && path[len - 2].v == d - 1) out.push_back({path});
        return;
      }
      const LatticePoint prev = path[s - 1];
      for (int v = prev.v + 1; v >= prev.v; --v) {
        if (v > d || v < s + 1 - k) continue;
        if (s == 1 && v != 1) continue;
        const bool flat = (v == prev.v);
        // A flat step needs a climb into it and a climb out of it.
        if (flat && (s < 2 || s + 1 >= len || prev.v != path[s - 2].v + 1)) continue;
        const bool after_flat = s >= 2 && path[s - 1].v == path[s - 2].v;
        if (after_flat && v != prev.v + 1) continue;
        for (int u = 1; u <= n; ++u) {
          if (!flat && u <= prev.u) continue;
          if (flat && (u == prev.u || u > path[s - 2].u)) continue;
          if (after_flat && u > path[s - 2].u) continue;
          path.push_back({u, v});
          self(self, s + 1);
          path.pop_back();
        }
      }
    };
    for (int u = 1; u <= n; ++u) {
      path.assign(1, {u, 0});
      extend(extend, 1);
    }
  }
  return out;
}

Monomial walk_leading_monomial(const MinorWalk& w, const Ring& ring) {
  MonomialBuilder b;
  for (const auto& p : w.steps) b.multiply(ring.coefficient_index(p.u, p.v));
  return b.build();
}

CoordinateSubspace coordinate_subspace(int d, int n, int s, int t) {
  check_dn(d, n);
  if (s < 1 || s > n || t < 1 || t > d) throw ParameterOutOfRange("coordinate_subspace: need 1<=s<=n, 1<=t<=d");
  CoordinateSubspace out{s, t, {}};
  for (int i = 1; i < s; ++i) out.variables.push_back(VariableId::coefficient(i, t - 1));
  for (int i = s + 1; i <= n; ++i) out.variables.push_back(VariableId::coefficient(i, t));
  return out;
}

std::vector<CoordinateSubspace> components(int d, int n) {
  check_dn(d, n);
  std::vector<CoordinateSubspace> out;
  for (int s = 1; s <= n; ++s)
    for (int t = 1; t <= d; ++t) out.push_back(coordinate_subspace(d, n, s, t));
  return out;
}

}  // namespace rforge
