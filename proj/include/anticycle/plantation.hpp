#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "anticycle/enumeration.hpp"
#include "anticycle/graph.hpp"

namespace anticycle {

/// Thrown when Z misses a cycle; carries that cycle of G - Z.
class NotCycleHitting : public InputError {
 public:
  explicit NotCycleHitting(std::vector<int> cycle);
  const std::vector<int>& cycle() const { return cycle_; }

 private:
  std::vector<int> cycle_;
};

/// (G, Z) with G - Z a forest. Reductions produce new plantations whose
/// vertices map back to the root graph they were derived from: each current
/// vertex stands for a class of root vertices (a singleton unless contracted).
struct Plantation {
  std::shared_ptr<const Graph> root;
  Graph g;
  VertexSet z;
  int s = 1;
  std::vector<std::vector<int>> classes;

  int order() const { return g.order(); }
  /// Smallest root vertex of v's class.
  int root_id(int v) const { return classes[static_cast<std::size_t>(v)].front(); }
  std::vector<int> root_ids(const std::vector<int>& vs) const;
  /// Vertices of G - Z with a neighbour in Z.
  VertexSet frontier() const;
  VertexSet forest_vertices() const { return z.complement(); }
  int z_degree(int v) const { return static_cast<int>(g.neighborhood(v).intersection_size(z)); }
  /// The same graph as a root of its own: identity classes.
  Plantation rebased() const;
};

/// Throws NotCycleHitting when G - Z has a cycle, InputError on bad ids or s < 1.
Plantation make_plantation(const Graph& g, const VertexSet& z, int s);

bool is_monic(const Plantation& p);
bool is_dyadic(const Plantation& p);
bool is_selfless(const Plantation& p);

/// Path of G - Z with at least one edge, both ends in N and no internal vertex
/// in N. Feet are the Z-neighbours of the ends, sorted.
struct Transition {
  Path path;
  std::vector<int> feet;
  friend bool operator==(const Transition&, const Transition&) = default;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// Sorted by path; each path runs from its smaller end.
std::vector<Transition> transitions(const Plantation& p);
std::vector<Transition> self_transitions(const Plantation& p);
/// Transitions whose feet are exactly {z1, z2} ({z1} when equal).
int multiplicity(const Plantation& p, int z1, int z2);
int thickness(const Plantation& p);

/// Empty when `t` is a transition of p with correctly computed feet.
std::string transition_problem(const Plantation& p, const Transition& t);
/// Empty when the set is normal: pairwise anticomplete or sharing an end,
/// and each member has an edge no other member uses.
std::string normal_set_problem(const Plantation& p, const std::vector<Transition>& set);

/// X and Y are root ids. `maps[i][v]` is the id before step i of the vertex
/// with id v after it.
struct ReductionTrace {
  std::vector<int> exploded;
  std::vector<int> deleted;
  std::vector<std::pair<int, int>> contracted;
  std::vector<std::vector<int>> maps;

  void append(const ReductionTrace& later);
  bool empty() const { return exploded.empty() && deleted.empty() && contracted.empty(); }
};

/// Deletes v in Z and its neighbours outside Z.
Plantation explode(const Plantation& p, int v, ReductionTrace* trace = nullptr);
Plantation explode_all(const Plantation& p, const VertexSet& x, ReductionTrace* trace = nullptr);
/// Deletes vertices of G - Z.
Plantation delete_vertices(const Plantation& p, const VertexSet& y, ReductionTrace* trace = nullptr);
/// Contracts the edge z1 z2 inside Z. Throws std::logic_error if the ends have
/// a common neighbour.
Plantation contract(const Plantation& p, int z1, int z2, ReductionTrace* trace = nullptr);

/// A closed walk in the current graph (consecutive vertices adjacent, all
/// distinct) as an induced cycle of the root graph.
Cycle lift_cycle(const Plantation& p, const std::vector<int>& walk);

Transition to_root(const Plantation& p, const Transition& t);

}  // namespace anticycle
