#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anticycle/common.hpp"
#include "anticycle/hitting.hpp"
#include "anticycle/phi_table.hpp"
#include "anticycle/plantation.hpp"
#include "anticycle/recognizer.hpp"

namespace anticycle {

struct BoundCheck {
  std::string name;
  BigCount lhs;
  BigCount rhs;
  bool holds = false;
};

/// lhs <= rhs
BoundCheck check_at_most(std::string name, const BigCount& lhs, const BigCount& rhs);

struct ReduceOptions {
  PhiTable phi = PhiTable::active();
  HittingOptions hitting;
};

/// Bound-or-witness result. `result` and `trace` are meaningful only when
/// there is no witness; the witness is in root ids.
struct Reduction {
  Plantation result;
  ReductionTrace trace;
  std::optional<PackingWitness> witness;
  std::vector<BoundCheck> checks;
  /// make_dyadic only: Z contains a triangle, so no Z-covering path exists.
  bool count_zero = false;

  bool all_hold() const;
};

/// Explodes fewer than s vertices of Z and deletes fewer than 2s*s! others to
/// remove every self-transition. Needs a monic plantation.
Reduction make_selfless(const Plantation& p, const ReduceOptions& opts = {});

/// Explodes at most 6s-4 vertices of Z, leaving thickness at most
/// 2*s!*(2*s!+s). Needs a monic selfless plantation.
Reduction reduce_thickness(const Plantation& p, const ReduceOptions& opts = {});

/// Directed transitions towards the lowest N-vertex of each component,
/// keeping the largest height class mod 3. Throws InputError when some
/// component of G - Z has fewer than two vertices of N.
std::vector<Transition> normal_transition_set(const Plantation& p);

/// Deletes vertices no Z-covering path can use and contracts edges inside Z
/// until Z is stable; stops early with count_zero when Z has a triangle.
Reduction make_dyadic(const Plantation& p);

/// Explodes at most 2*phi(s) vertices of Z, leaving at most 2|Z| binary
/// vertices. Needs a dyadic plantation.
Reduction reduce_binary(const Plantation& p, const ReduceOptions& opts = {});

struct Stage {
  std::string name;
  ReductionTrace trace;
  std::vector<BoundCheck> checks;
};

/// Ids of X, Y, N0, N1, N2 are those of the input plantation.
struct BoundaryReport {
  std::optional<PackingWitness> witness;
  std::string witness_stage;
  VertexSet x;
  VertexSet y;
  VertexSet n0;
  VertexSet n1;
  VertexSet n2;
  long long boundary_edges = 0;
  bool edge_bound_holds = false;
  std::vector<Stage> stages;
  std::vector<BoundCheck> checks;

  bool all_hold() const;
};

/// reduce_binary, removal of binary vertices, make_selfless and
/// reduce_thickness in turn, then the edge count between Z - X and
/// V(F) - (N(X) u N0). Needs a dyadic plantation.
BoundaryReport boundary_reduction(const Plantation& p, const ReduceOptions& opts = {});

/// Cycles of p's current graph, lifted to root ids.
PackingWitness lift_witness(const Plantation& p, const PackingWitness& w);

}  // namespace anticycle
