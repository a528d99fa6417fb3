#pragma once

#include "rforge/cascade.hpp"
#include "rforge/monomial.hpp"
#include "rforge/ring.hpp"

#include <optional>
#include <span>
#include <vector>

namespace rforge {

// Vertex (u, v) of the n x (d+1) lattice; u indexes the polynomial, v the
// coefficient position, so (u, v) stands for a_{u,v}.
struct LatticePoint {
  int u;
  int v;

  bool operator==(const LatticePoint&) const = default;
  auto operator<=>(const LatticePoint&) const = default;
};

// A minor walk: the diagonal of a nonzero maximal minor of M_k, read as a
// path through the coefficient lattice. Step s has (u_s, v_s) = (j_s, s - i_s)
// for the selected row (i_s, j_s).
struct MinorWalk {
  std::vector<LatticePoint> steps;

  std::size_t length() const { return steps.size(); }
  bool operator==(const MinorWalk&) const = default;
  auto operator<=>(const MinorWalk&) const = default;
};

std::optional<MinorWalk> try_rows_to_walk(const RowSelection& sel);
// Throws ZeroMinor when a step leaves the lattice.
MinorWalk rows_to_walk(const RowSelection& sel);
// Inverse map; k is the walk length minus d.
RowSelection walk_to_rows(const MinorWalk& w, int d, int n);

// Lattice bounds, v_1 = 0, v_L = d, and each step either stays at or below
// the previous v, or climbs by one while moving to a strictly larger u.
bool is_minor_walk(std::span<const LatticePoint> steps, int d, int n);

// Local characterisation of inclusion-minimal minor walks: v nondecreasing,
// v_2 = 1 and v_{L-1} = d-1, and every flat step v_{s+1} = v_s is preceded
// and followed by a climb with u_{s+2} <= u_s and u_{s+1} <= u_{s-1}.
// False for non-walks.
bool is_reduced(std::span<const LatticePoint> steps, int d, int n);

// All minor walks of length d+k, in lexicographic order of their row
// selections. Depth-first with the reachability bound s-k <= v_s <= s-1.
std::vector<MinorWalk> enumerate_walks(int d, int n, int k);

// Reduced walks of every length d+1..2d, generated directly from the local
// conditions. These index the Groebner basis G.
std::vector<MinorWalk> enumerate_reduced(int d, int n);

// Product of a_{u_s, v_s} over the steps, with multiplicity.
Monomial walk_leading_monomial(const MinorWalk& w, const Ring& ring);

// S_{s,t} = {a_{i,t-1} : i < s} u {a_{i,t} : i > s}.
struct CoordinateSubspace {
  int s;
  int t;
  std::vector<VariableId> variables;
};

CoordinateSubspace coordinate_subspace(int d, int n, int s, int t);
// All nd subspaces, s outer, t inner.
std::vector<CoordinateSubspace> components(int d, int n);

}  // namespace rforge
