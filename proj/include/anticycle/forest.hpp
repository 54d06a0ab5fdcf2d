#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "anticycle/enumeration.hpp"
#include "anticycle/graph.hpp"

namespace anticycle {

enum class SubtreeMode { Disjoint, Anticomplete };

/// Subtrees of a host forest. Members are nonempty and connected in the host.
struct SubtreeFamily {
  Graph host;
  std::vector<VertexSet> members;
};

/// Throws InputError unless the host is a forest and every member is a
/// nonempty connected vertex set of it.
void validate_family(const SubtreeFamily& fam);

/// Vertex i stands for member i. Adjacent iff the members share a vertex
/// (Disjoint) or are not anticomplete (Anticomplete).
Graph intersection_conflict_graph(const SubtreeFamily& fam, SubtreeMode mode);

struct RingCheck {
  bool ok = true;
  /// Member indices along a cycle of the conflict graph when not ok.
  std::vector<int> cycle;
};

/// A bipartite conflict graph (anticomplete mode) must be acyclic.
RingCheck check_ring(const SubtreeFamily& fam);

/// Stable set X of the forest h with |X| = |a| and |X & a| = n, built by
/// peeling a vertex of degree at most one. Throws InputError on a bad
/// bipartition or n out of range.
VertexSet balanced_stable_set(const Graph& h, const VertexSet& a, const VertexSet& b, int n);

/// From s families of at least s!*k paths (each family pairwise anticomplete)
/// choose k per family so that all s*k chosen paths are pairwise anticomplete.
/// Only the first s!*k paths of each family in canonical order are used.
std::vector<std::vector<Path>> select_anticomplete_paths(const Graph& host, const std::vector<std::vector<Path>>& families,
                                                         int k);

struct SubtreeHitting {
  /// n member indices, pairwise disjoint (or anticomplete); empty when `hit` is set.
  std::vector<std::size_t> packing;
  std::optional<VertexSet> hit;

  bool is_packing() const { return !hit.has_value(); }
};

/// Either n pairwise disjoint (anticomplete) members, or a set meeting every
/// member of size at most n-1 (2(n-1) in anticomplete mode).
SubtreeHitting subtree_hitting_set(const SubtreeFamily& fam, int n, SubtreeMode mode);

}  // namespace anticycle
