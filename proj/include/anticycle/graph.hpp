#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "anticycle/common.hpp"
#include "anticycle/vertex_set.hpp"

namespace anticycle {

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on {0..n-1}. Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws InputError on self-loops, repeated edges, or out-of-range ids.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  /// Edges with u < v, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  /// Sorted ascending.
  const std::vector<int>& neighbors(int v) const { return adj_list_[static_cast<std::size_t>(v)]; }
  const VertexSet& neighborhood(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }

  VertexSet empty_set() const { return VertexSet(n_); }
  VertexSet all_vertices() const { return VertexSet::full(n_); }

  void check_vertex(int v) const;
  void check_set(const VertexSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_list_;
  std::vector<VertexSet> adj_;
};

/// Accumulates edges with set semantics; duplicates are ignored.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : n_(n) {}
  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  void remove_edge(int u, int v);
  Graph build() const;
  int order() const { return n_; }

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// Induced subgraph plus the maps between old and new ids.
struct Subgraph {
  Graph graph;
  std::vector<int> to_parent;    // new id -> old id
  std::vector<int> from_parent;  // old id -> new id, or -1
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Disjoint with no edge between them.
bool anticomplete(const Graph& g, const VertexSet& x, const VertexSet& y);
bool is_stable(const Graph& g, const VertexSet& s);
bool is_forest(const Graph& g);
/// Each block sorted; blocks ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);
/// Components of g restricted to `within`.
std::vector<std::vector<int>> components(const Graph& g, const VertexSet& within);

/// Union of closed neighbourhoods of the members of s.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

/// Some cycle of g[within] as a vertex sequence, or empty if g[within] is a forest.
std::vector<int> find_cycle(const Graph& g, const VertexSet& within);
std::vector<int> find_cycle(const Graph& g);

/// Loops and parallel edges allowed. Labels tie edges back to their origin.
struct MultiEdge {
  int u = 0;
  int v = 0;
  std::uint64_t label = 0;
};

class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n) : n_(n) {}

  /// Assigns the next free label.
  std::uint64_t add_edge(int u, int v);
  /// Throws InputError if the label is taken.
  void add_edge(int u, int v, std::uint64_t label);

  int order() const { return n_; }
  const std::vector<MultiEdge>& edges() const { return edges_; }

 private:
  int n_ = 0;
  std::uint64_t next_label_ = 0;
  std::vector<MultiEdge> edges_;
};

}  // namespace anticycle
