#include "anticycle/graph.hpp"

#include <algorithm>
#include <numeric>

namespace anticycle {

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  adj_list_.resize(static_cast<std::size_t>(n));
  adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InputError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range");
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (adj_[static_cast<std::size_t>(e.u)].contains(e.v)) {
      throw InputError("repeated edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    adj_[static_cast<std::size_t>(e.u)].insert(e.v);
    adj_[static_cast<std::size_t>(e.v)].insert(e.u);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  for (const Edge& e : edges_) {
    adj_list_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_list_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& l : adj_list_) std::sort(l.begin(), l.end());
}

namespace {
std::vector<Edge> to_edges(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<Edge> out;
  for (auto [u, v] : pairs) out.push_back({u, v});
  return out;
}
}  // namespace

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n, to_edges(edges)) {}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw InputError("vertex " + std::to_string(v) + " out of range");
}

void Graph::check_set(const VertexSet& s) const {
  if (s.universe() != n_) {
    throw InputError("vertex set universe " + std::to_string(s.universe()) + " does not match graph order " +
                     std::to_string(n_));
  }
}

void GraphBuilder::add_edge(int u, int v) {
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  if (!has_edge(u, v)) edges_.push_back({u, v});
}

bool GraphBuilder::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::find(edges_.begin(), edges_.end(), Edge{u, v}) != edges_.end();
}

void GraphBuilder::remove_edge(int u, int v) {
  if (u > v) std::swap(u, v);
  std::erase(edges_, Edge{u, v});
}

Graph GraphBuilder::build() const { return Graph(n_, edges_); }

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  g.check_set(keep);
  Subgraph out;
  out.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
  keep.for_each([&](int v) {
    out.from_parent[static_cast<std::size_t>(v)] = static_cast<int>(out.to_parent.size());
    out.to_parent.push_back(v);
  });
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = out.from_parent[static_cast<std::size_t>(e.u)];
    const int b = out.from_parent[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  out.graph = Graph(static_cast<int>(out.to_parent.size()), edges);
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  s.for_each([&](int v) { out |= g.neighborhood(v); });
  return out;
}

bool anticomplete(const Graph& g, const VertexSet& x, const VertexSet& y) {
  g.check_set(x);
  g.check_set(y);
  if (x.intersects(y)) return false;
  bool ok = true;
  x.for_each([&](int v) {
    if (ok && g.neighborhood(v).intersects(y)) ok = false;
  });
  return ok;
}

bool is_stable(const Graph& g, const VertexSet& s) {
  g.check_set(s);
  bool ok = true;
  s.for_each([&](int v) {
    if (ok && g.neighborhood(v).intersects(s)) ok = false;
  });
  return ok;
}

namespace {

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

bool is_forest(const Graph& g) {
  UnionFind uf(g.order());
  for (const Edge& e : g.edges()) {
    if (!uf.unite(e.u, e.v)) return false;
  }
  return true;
}

std::vector<std::vector<int>> components(const Graph& g, const VertexSet& within) {
  std::vector<std::vector<int>> out;
  VertexSet seen(g.order());
  std::vector<int> stack;
  within.for_each([&](int root) {
    if (seen.contains(root)) return;
    std::vector<int> block;
    seen.insert(root);
    stack.push_back(root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      block.push_back(v);
      for (int w : g.neighbors(v)) {
        if (within.contains(w) && !seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    std::sort(block.begin(), block.end());
    out.push_back(std::move(block));
  });
  return out;
}

std::vector<std::vector<int>> components(const Graph& g) { return components(g, g.all_vertices()); }

std::vector<int> find_cycle(const Graph& g, const VertexSet& within) {
  const int n = g.order();
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  std::vector<int> cycle;
  within.for_each([&](int root) {
    if (!cycle.empty() || depth[static_cast<std::size_t>(root)] >= 0) return;
    depth[static_cast<std::size_t>(root)] = 0;
    stack.push_back(root);
    while (!stack.empty() && cycle.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (!within.contains(w) || w == parent[static_cast<std::size_t>(v)]) continue;
        if (depth[static_cast<std::size_t>(w)] < 0) {
          depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
          parent[static_cast<std::size_t>(w)] = v;
          stack.push_back(w);
          continue;
        }
        // Non-tree edge v-w closes a cycle through the lowest common ancestor.
        std::vector<int> left{v};
        std::vector<int> right{w};
        int a = v;
        int b = w;
        while (a != b) {
          if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
            a = parent[static_cast<std::size_t>(a)];
            left.push_back(a);
          } else {
            b = parent[static_cast<std::size_t>(b)];
            right.push_back(b);
          }
        }
        right.pop_back();
        cycle = left;
        cycle.insert(cycle.end(), right.rbegin(), right.rend());
        break;
      }
    }
    stack.clear();
  });
  return cycle;
}

std::vector<int> find_cycle(const Graph& g) { return find_cycle(g, g.all_vertices()); }

std::uint64_t Multigraph::add_edge(int u, int v) {
  const std::uint64_t label = next_label_;
  add_edge(u, v, label);
  return label;
}

void Multigraph::add_edge(int u, int v, std::uint64_t label) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) {
    throw InputError("multigraph edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  for (const MultiEdge& e : edges_) {
    if (e.label == label) throw InputError("duplicate multigraph edge label " + std::to_string(label));
  }
  edges_.push_back({std::min(u, v), std::max(u, v), label});
  next_label_ = std::max(next_label_, label + 1);
}

}  // namespace anticycle
