#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anticycle/graph.hpp"
#include "anticycle/phi_table.hpp"
#include "anticycle/plantation.hpp"
#include "anticycle/recognizer.hpp"

namespace anticycle {

/// Closed walk v0 -l0- v1 -l1- ... v(k-1) -l(k-1)- v0 with distinct vertices
/// and distinct edge labels. A loop has k = 1, a digon k = 2.
struct MultiCycle {
  std::vector<int> vertices;
  std::vector<std::uint64_t> labels;
  friend bool operator==(const MultiCycle&, const MultiCycle&) = default;
};

struct PackOrCover {
  std::vector<MultiCycle> packing;
  std::optional<VertexSet> cover;

  bool is_packing() const { return !cover.has_value(); }
};

struct HittingOptions {
  std::size_t max_cycles = 100'000;
  std::uint64_t max_nodes = 5'000'000;
};

/// Empty when `c` is a cycle of h; otherwise the first problem found.
std::string multicycle_problem(const Multigraph& h, const MultiCycle& c);

/// Every cycle of h (loops and parallel pairs included) meets x.
bool is_cycle_cover(const Multigraph& h, const VertexSet& x);

/// Exact minimum feedback vertex set. Throws CapExceeded("max-fvs-nodes")
/// when the branching budget runs out.
VertexSet minimum_feedback_vertex_set(const Multigraph& h, const HittingOptions& opts = {});

/// s pairwise vertex-disjoint cycles, smallest vertex sets first, or nothing.
std::optional<std::vector<MultiCycle>> find_disjoint_cycles(const Multigraph& h, int s,
                                                            const HittingOptions& opts = {});

/// Packing of s disjoint cycles when one exists; otherwise a minimum cover.
/// A cover larger than phi(s) throws PhiTableError.
PackOrCover pack_or_cover(const Multigraph& h, int s, const PhiTable& phi = PhiTable::active(),
                          const HittingOptions& opts = {});

/// The simple graph as a multigraph; edge labels are edge indices.
Multigraph as_multigraph(const Graph& g);

/// Vertex i is the i-th smallest member of Z; one edge per transition joining
/// its feet (a loop for a self-transition), labelled with the transition's
/// index.
Multigraph feet_multigraph(const Plantation& p, const std::vector<Transition>& transitions);

struct EpOutcome {
  std::optional<PackingWitness> witness;
  VertexSet x;
  std::vector<Transition> uncovered;
};

/// Packing-or-cover on the feet multigraph of a normal set. A packing is
/// lifted to s pairwise anticomplete cycles of the root graph; a cover (ids of
/// p) comes back with the members that have no foot in it.
EpOutcome apply_ep(const Plantation& p, const std::vector<Transition>& normal, const PhiTable& phi = PhiTable::active(),
                   const HittingOptions& opts = {});

}  // namespace anticycle
