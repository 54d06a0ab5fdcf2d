#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "anticycle/common.hpp"
#include "anticycle/graph.hpp"

namespace anticycle {

/// Vertex sequence; the first entry is the distinguished (first) vertex.
struct Path {
  std::vector<int> vertices;

  std::size_t length() const { return vertices.size(); }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Cyclic vertex sequence of length >= 3.
struct Cycle {
  std::vector<int> vertices;

  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

bool is_path(const Graph& g, std::span<const int> seq);
bool is_induced_path(const Graph& g, std::span<const int> seq);
bool is_cycle(const Graph& g, std::span<const int> seq);
bool is_induced_cycle(const Graph& g, std::span<const int> seq);

/// The lexicographically smaller of the two orientations.
Path canonical_path(Path p);
/// Rotated to start at the smallest id, then oriented so the second entry is
/// smaller than the last.
Cycle canonical_cycle(Cycle c);

VertexSet vertex_set_of(const Graph& g, std::span<const int> seq);

/// Resumable depth-first enumeration of the ordered induced paths that start
/// at one vertex. Neighbours are tried in ascending id order; the one-vertex
/// path comes first.
///
///   InducedPathStream s(g, v);
///   while (s.next()) use(s.current());
class InducedPathStream {
 public:
  /// `max_len` counts vertices; values < 1 mean unbounded. Vertices outside
  /// `allowed` (when given) are never entered.
  InducedPathStream(const Graph& g, int start, int max_len = 0, const VertexSet* allowed = nullptr);

  bool next();
  std::span<const int> current() const { return path_; }

 private:
  struct Frame {
    std::vector<int> candidates;
    std::size_t next = 0;
  };

  void push(int v);

  const Graph* g_;
  int start_;
  std::size_t max_len_;
  std::optional<VertexSet> allowed_;
  bool started_ = false;
  std::vector<int> path_;
  std::vector<Frame> frames_;
  // blocked_[d] = union of closed neighbourhoods of path_[0..d-1]
  std::vector<VertexSet> blocked_;
};

/// Number of ordered induced paths starting at v. Throws CapExceeded once the
/// running count passes `cap` (0 = no cap).
std::uint64_t count_induced_paths_from(const Graph& g, int v, int max_len = 0, std::uint64_t cap = 0);

/// Ordered counts every path with an edge twice; ordered = 2*unordered - n
/// when no length cap is applied.
BigCount count_induced_paths(const Graph& g, bool ordered, int max_len = 0, std::uint64_t cap = 0);

/// Cycles V(p) + {w} for every w outside p adjacent to both ends of p and to
/// no internal vertex. Throws InputError if p is not an induced path.
std::vector<Cycle> induced_cycles_extending(const Graph& g, const Path& p);

/// Calls `visit` once per induced cycle, in canonical form. Stops early when
/// `visit` returns false.
void for_each_induced_cycle(const Graph& g, const std::function<bool(const Cycle&)>& visit);
std::vector<Cycle> enumerate_induced_cycles(const Graph& g);

/// Distinct vertex sets of 4-cycles (not necessarily induced), sorted.
std::vector<std::array<int, 4>> four_cycle_vertex_sets(const Graph& g);

/// Vertices outside V(c) with no neighbour in V(c). Throws InputError unless c
/// is a 4-cycle of g.
VertexSet exclusion_set(const Graph& g, const Cycle& c);

/// Longest prefix p1..pj lying entirely inside some exclusion set X_C, or
/// nothing when p1 lies in none.
std::optional<Path> head(const Graph& g, const Path& p);

}  // namespace anticycle
