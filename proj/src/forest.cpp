#include "anticycle/forest.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace anticycle {

namespace {

bool connected_in(const Graph& g, const VertexSet& s) {
  const int start = s.first();
  if (start < 0) return false;
  VertexSet seen(g.order());
  std::vector<int> stack{start};
  seen.insert(start);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : g.neighbors(v)) {
      if (s.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen == s;
}

// Depth of every vertex when each component is rooted at its lowest id.
std::vector<int> depths(const Graph& g) {
  std::vector<int> depth(static_cast<std::size_t>(g.order()), -1);
  for (int r = 0; r < g.order(); ++r) {
    if (depth[r] >= 0) continue;
    depth[r] = 0;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (depth[w] < 0) {
          depth[w] = depth[v] + 1;
          q.push(w);
        }
      }
    }
  }
  return depth;
}

struct Greedy {
  std::vector<std::size_t> selected;
  VertexSet x;
};

// Deepest-top greedy: the selected members are pairwise disjoint and their
// tops meet every member.
Greedy deepest_top_greedy(const Graph& host, const std::vector<VertexSet>& members) {
  const std::vector<int> depth = depths(host);
  struct Entry {
    int top_depth;
    int top;
    std::vector<int> verts;
    std::size_t index;
  };
  std::vector<Entry> order;
  order.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    Entry e{-1, -1, members[i].members(), i};
    for (int v : e.verts) {
      if (e.top < 0 || depth[v] < e.top_depth) {
        e.top = v;
        e.top_depth = depth[v];
      }
    }
    order.push_back(std::move(e));
  }
  std::sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) {
    if (a.top_depth != b.top_depth) return a.top_depth > b.top_depth;
    if (a.verts != b.verts) return a.verts < b.verts;
    return a.index < b.index;
  });
  Greedy out{{}, host.empty_set()};
  for (const Entry& e : order) {
    if (members[e.index].intersects(out.x)) continue;
    out.selected.push_back(e.index);
    out.x.insert(e.top);
  }
  return out;
}

bool two_colourable(const Graph& h) {
  std::vector<int> colour(static_cast<std::size_t>(h.order()), -1);
  for (int r = 0; r < h.order(); ++r) {
    if (colour[r] >= 0) continue;
    colour[r] = 0;
    std::vector<int> stack{r};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : h.neighbors(v)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool paths_anticomplete(const Graph& host, const Path& p, const Path& q) {
  return anticomplete(host, vertex_set_of(host, p.vertices), vertex_set_of(host, q.vertices));
}

std::vector<std::vector<Path>> select_rec(const Graph& host, const std::vector<std::vector<Path>>& fam, int k) {
  const int s = static_cast<int>(fam.size());
  if (s == 0) return {};
  const auto take = [](const std::vector<Path>& from, std::size_t count) {
    return std::vector<Path>(from.begin(), from.begin() + static_cast<std::ptrdiff_t>(count));
  };
  if (s == 1) return {take(fam[0], static_cast<std::size_t>(k))};

  const long long full = factorial(s) * k;
  const long long part = factorial(s - 1) * k;
  const int m = static_cast<int>(full);
  std::vector<bool> keep1(static_cast<std::size_t>(m), true);
  std::vector<std::vector<Path>> rest;
  for (int i = 1; i < s; ++i) {
    // Conflict forest on A1 (ids 0..m-1) and Ai (ids m..2m-1).
    GraphBuilder b(2 * m);
    for (int x = 0; x < m; ++x) {
      for (int y = 0; y < m; ++y) {
        if (!paths_anticomplete(host, fam[0][x], fam[i][y])) b.add_edge(x, m + y);
      }
    }
    const Graph h = b.build();
    VertexSet a(2 * m), bb(2 * m);
    for (int x = 0; x < m; ++x) {
      a.insert(x);
      bb.insert(m + x);
    }
    const VertexSet xi = balanced_stable_set(h, a, bb, static_cast<int>(full - part));
    std::vector<Path> fi;
    for (int x = 0; x < m; ++x) {
      if (!xi.contains(x)) keep1[x] = false;
      if (xi.contains(m + x)) fi.push_back(fam[i][x]);
    }
    rest.push_back(std::move(fi));
  }
  std::vector<Path> f1;
  for (int x = 0; x < m && static_cast<long long>(f1.size()) < part; ++x) {
    if (keep1[x]) f1.push_back(fam[0][x]);
  }
  if (static_cast<long long>(f1.size()) < part) throw std::logic_error("common part of the stable sets is too small");
  std::vector<std::vector<Path>> out{take(f1, static_cast<std::size_t>(k))};
  for (auto& chosen : select_rec(host, rest, k)) out.push_back(std::move(chosen));
  return out;
}

}  // namespace

void validate_family(const SubtreeFamily& fam) {
  if (!is_forest(fam.host)) throw InputError("host graph is not a forest");
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    const VertexSet& m = fam.members[i];
    if (m.universe() != fam.host.order()) throw InputError("member " + std::to_string(i) + " has the wrong universe");
    if (!connected_in(fam.host, m)) {
      throw InputError("member " + std::to_string(i) + " is empty or not connected in the host");
    }
  }
}

Graph intersection_conflict_graph(const SubtreeFamily& fam, SubtreeMode mode) {
  validate_family(fam);
  const int l = static_cast<int>(fam.members.size());
  std::vector<VertexSet> reach;
  reach.reserve(fam.members.size());
  for (const VertexSet& m : fam.members) {
    reach.push_back(mode == SubtreeMode::Disjoint ? m : closed_neighborhood(fam.host, m));
  }
  std::vector<Edge> edges;
  for (int i = 0; i < l; ++i) {
    for (int j = i + 1; j < l; ++j) {
      if (reach[i].intersects(fam.members[j])) edges.push_back({i, j});
    }
  }
  return Graph(l, edges);
}

RingCheck check_ring(const SubtreeFamily& fam) {
  const Graph h = intersection_conflict_graph(fam, SubtreeMode::Anticomplete);
  RingCheck out;
  if (!two_colourable(h)) return out;
  out.cycle = find_cycle(h);
  out.ok = out.cycle.empty();
  return out;
}

VertexSet balanced_stable_set(const Graph& h, const VertexSet& a, const VertexSet& b, int n) {
  h.check_set(a);
  h.check_set(b);
  if (!is_forest(h)) throw InputError("graph is not a forest");
  if (a.intersects(b) || (a | b) != h.all_vertices()) throw InputError("parts do not partition the vertex set");
  for (const Edge& e : h.edges()) {
    if (a.contains(e.u) == a.contains(e.v)) throw InputError("edge inside one part");
  }
  if (a.size() != b.size()) throw InputError("parts have different sizes");
  if (n < 0 || n > static_cast<int>(a.size())) throw InputError("n out of range");

  VertexSet ra = a, rb = b, x = h.empty_set();
  while (true) {
    if (n == static_cast<int>(ra.size())) {
      x |= ra;
      break;
    }
    if (n == 0) {
      x |= rb;
      break;
    }
    const VertexSet alive = ra | rb;
    int v = -1;
    for (int c = alive.first(); c >= 0; c = alive.next(c + 1)) {
      if (h.neighborhood(c).intersection_size(alive) <= 1) {
        v = c;
        break;
      }
    }
    if (v < 0) throw std::logic_error("forest without a vertex of degree at most one");
    const bool in_b = rb.contains(v);
    VertexSet& own = in_b ? rb : ra;
    VertexSet& other = in_b ? ra : rb;
    const VertexSet nb = h.neighborhood(v) & other;
    // An isolated v gives up the highest vertex of the other side.
    const int u = nb.empty() ? other.members().back() : nb.first();
    own.erase(v);
    other.erase(u);
    x.insert(v);
    if (!in_b) --n;
  }
  return x;
}

std::vector<std::vector<Path>> select_anticomplete_paths(const Graph& host, const std::vector<std::vector<Path>>& families,
                                                         int k) {
  if (!is_forest(host)) throw InputError("host graph is not a forest");
  if (k < 0) throw InputError("k must be nonnegative");
  const int s = static_cast<int>(families.size());
  const long long want = factorial(s) * k;
  std::vector<std::vector<Path>> fam;
  for (int i = 0; i < s; ++i) {
    if (static_cast<long long>(families[i].size()) < want) {
      throw InputError("family " + std::to_string(i) + " needs at least " + std::to_string(want) + " paths");
    }
    std::vector<Path> sorted;
    for (const Path& p : families[i]) {
      if (!is_path(host, p.vertices)) throw InputError("family " + std::to_string(i) + " contains a non-path");
      sorted.push_back(canonical_path(p));
    }
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t x = 0; x < sorted.size(); ++x) {
      for (std::size_t y = x + 1; y < sorted.size(); ++y) {
        if (!paths_anticomplete(host, sorted[x], sorted[y])) {
          throw InputError("family " + std::to_string(i) + " is not pairwise anticomplete");
        }
      }
    }
    sorted.resize(static_cast<std::size_t>(want));
    fam.push_back(std::move(sorted));
  }
  std::vector<std::vector<Path>> out = select_rec(host, fam, k);
  std::vector<const Path*> all;
  for (const auto& f : out) {
    if (static_cast<int>(f.size()) != k) throw std::logic_error("wrong number of selected paths");
    for (const Path& p : f) all.push_back(&p);
  }
  for (std::size_t x = 0; x < all.size(); ++x) {
    for (std::size_t y = x + 1; y < all.size(); ++y) {
      if (!paths_anticomplete(host, *all[x], *all[y])) throw std::logic_error("selected paths are not anticomplete");
    }
  }
  return out;
}

SubtreeHitting subtree_hitting_set(const SubtreeFamily& fam, int n, SubtreeMode mode) {
  validate_family(fam);
  if (n < 1) throw InputError("n must be at least 1");
  const Graph& f = fam.host;
  SubtreeHitting out;
  if (mode == SubtreeMode::Disjoint) {
    Greedy g = deepest_top_greedy(f, fam.members);
    if (static_cast<int>(g.selected.size()) >= n) {
      out.packing.assign(g.selected.begin(), g.selected.begin() + n);
    } else {
      out.hit = std::move(g.x);
    }
    return out;
  }

  // Subdivide every edge: vertex n_f + i stands for edge i.
  const int nf = f.order();
  const auto& edges = f.edges();
  std::vector<Edge> sub_edges;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int ve = nf + static_cast<int>(i);
    sub_edges.push_back({edges[i].u, ve});
    sub_edges.push_back({edges[i].v, ve});
  }
  const Graph fs(nf + static_cast<int>(edges.size()), sub_edges);
  std::vector<VertexSet> lifted;
  for (const VertexSet& m : fam.members) {
    VertexSet t(fs.order());
    m.for_each([&](int v) { t.insert(v); });
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (m.contains(edges[i].u) || m.contains(edges[i].v)) t.insert(nf + static_cast<int>(i));
    }
    lifted.push_back(std::move(t));
  }
  Greedy g = deepest_top_greedy(fs, lifted);
  if (static_cast<int>(g.selected.size()) >= n) {
    out.packing.assign(g.selected.begin(), g.selected.begin() + n);
    return out;
  }
  VertexSet hit = f.empty_set();
  g.x.for_each([&](int v) {
    if (v < nf) {
      hit.insert(v);
    } else {
      const Edge& e = edges[static_cast<std::size_t>(v - nf)];
      hit.insert(e.u);
      hit.insert(e.v);
    }
  });
  out.hit = std::move(hit);
  return out;
}

}  // namespace anticycle
