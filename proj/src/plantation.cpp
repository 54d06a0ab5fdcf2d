#include "anticycle/plantation.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "anticycle/recognizer.hpp"

namespace anticycle {

namespace {

std::string join(const std::vector<int>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(vs[i]);
  }
  return out;
}

// Induced on `keep`; `map` receives new id -> old id.
Plantation restrict_to(const Plantation& p, const VertexSet& keep, std::vector<int>& map) {
  Subgraph sub = induced_subgraph(p.g, keep);
  Plantation out;
  out.root = p.root;
  out.s = p.s;
  out.g = std::move(sub.graph);
  out.z = VertexSet(out.g.order());
  for (int v = 0; v < out.g.order(); ++v) {
    const int old = sub.to_parent[static_cast<std::size_t>(v)];
    if (p.z.contains(old)) out.z.insert(v);
    out.classes.push_back(p.classes[static_cast<std::size_t>(old)]);
  }
  map = std::move(sub.to_parent);
  return out;
}

std::vector<int> feet_of(const Plantation& p, int a, int b) {
  VertexSet f = p.g.neighborhood(a) & p.z;
  f |= p.g.neighborhood(b) & p.z;
  return f.members();
}

// Path from `from` to `to` inside the root graph restricted to `within`.
std::vector<int> path_inside(const Graph& g, const std::vector<int>& within, int from, int to) {
  if (from == to) return {from};
  VertexSet allowed = VertexSet::from(g.order(), within);
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
  std::queue<int> q;
  q.push(from);
  parent[from] = from;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    if (v == to) break;
    for (int w : g.neighbors(v)) {
      if (allowed.contains(w) && parent[w] < 0) {
        parent[w] = v;
        q.push(w);
      }
    }
  }
  if (parent[to] < 0) throw std::logic_error("contracted class is not connected");
  std::vector<int> path;
  for (int v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

NotCycleHitting::NotCycleHitting(std::vector<int> cycle)
    : InputError("Z is not cycle-hitting; G - Z has the cycle " + join(cycle)), cycle_(std::move(cycle)) {}

std::vector<int> Plantation::root_ids(const std::vector<int>& vs) const {
  std::vector<int> out;
  out.reserve(vs.size());
  for (int v : vs) out.push_back(root_id(v));
  return out;
}

VertexSet Plantation::frontier() const {
  VertexSet n = g.empty_set();
  z.for_each([&](int v) { n |= g.neighborhood(v); });
  return n - z;
}

Plantation Plantation::rebased() const {
  Plantation out;
  out.root = std::make_shared<const Graph>(g);
  out.g = g;
  out.z = z;
  out.s = s;
  for (int v = 0; v < g.order(); ++v) out.classes.push_back({v});
  return out;
}

Plantation make_plantation(const Graph& g, const VertexSet& z, int s) {
  if (s < 1) throw InputError("s must be at least 1");
  g.check_set(z);
  std::vector<int> cycle = find_cycle(g, z.complement());
  if (!cycle.empty()) throw NotCycleHitting(std::move(cycle));
  Plantation p;
  p.root = std::make_shared<const Graph>(g);
  p.g = g;
  p.z = z;
  p.s = s;
  for (int v = 0; v < g.order(); ++v) p.classes.push_back({v});
  return p;
}

bool is_monic(const Plantation& p) {
  if (!is_stable(p.g, p.z)) return false;
  const VertexSet n = p.frontier();
  for (int v = n.first(); v >= 0; v = n.next(v + 1)) {
    if (p.z_degree(v) != 1) return false;
  }
  return true;
}

bool is_dyadic(const Plantation& p) {
  if (!is_stable(p.g, p.z)) return false;
  const VertexSet f = p.forest_vertices();
  for (int v = f.first(); v >= 0; v = f.next(v + 1)) {
    if (p.z_degree(v) > 2) return false;
  }
  return true;
}

bool is_selfless(const Plantation& p) { return self_transitions(p).empty(); }

std::vector<Transition> transitions(const Plantation& p) {
  const VertexSet n = p.frontier();
  std::vector<Transition> out;
  std::vector<int> parent(static_cast<std::size_t>(p.order()), -1);
  for (int a = n.first(); a >= 0; a = n.next(a + 1)) {
    std::vector<int> touched{a};
    std::vector<int> stack{a};
    parent[a] = a;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : p.g.neighbors(v)) {
        if (p.z.contains(w) || parent[w] >= 0) continue;
        parent[w] = v;
        touched.push_back(w);
        if (n.contains(w)) {
          if (a < w) {
            Transition t;
            for (int x = w; x != a; x = parent[x]) t.path.vertices.push_back(x);
            t.path.vertices.push_back(a);
            std::reverse(t.path.vertices.begin(), t.path.vertices.end());
            t.feet = feet_of(p, a, w);
            out.push_back(std::move(t));
          }
        } else {
          stack.push_back(w);
        }
      }
    }
    for (int v : touched) parent[v] = -1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Transition> self_transitions(const Plantation& p) {
  std::vector<Transition> out;
  for (Transition& t : transitions(p)) {
    if (t.feet.size() == 1) out.push_back(std::move(t));
  }
  return out;
}

int multiplicity(const Plantation& p, int z1, int z2) {
  std::vector<int> want = z1 == z2 ? std::vector<int>{z1} : std::vector<int>{std::min(z1, z2), std::max(z1, z2)};
  int count = 0;
  for (const Transition& t : transitions(p)) {
    if (t.feet == want) ++count;
  }
  return count;
}

int thickness(const Plantation& p) {
  std::vector<std::vector<int>> keys;
  for (const Transition& t : transitions(p)) {
    if (t.feet.size() <= 2) keys.push_back(t.feet);
  }
  std::sort(keys.begin(), keys.end());
  int best = 0;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    best = std::max(best, static_cast<int>(j - i));
    i = j;
  }
  return best;
}

std::string transition_problem(const Plantation& p, const Transition& t) {
  const auto& vs = t.path.vertices;
  if (vs.size() < 2) return "transition needs at least one edge";
  if (!is_path(p.g, vs)) return "not a path of the graph";
  for (int v : vs) {
    if (p.z.contains(v)) return "path meets Z at " + std::to_string(v);
  }
  const VertexSet n = p.frontier();
  if (!n.contains(vs.front()) || !n.contains(vs.back())) return "an end is not in N";
  for (std::size_t i = 1; i + 1 < vs.size(); ++i) {
    if (n.contains(vs[i])) return "internal vertex " + std::to_string(vs[i]) + " is in N";
  }
  if (t.feet != feet_of(p, vs.front(), vs.back())) return "feet do not match the ends";
  return {};
}

std::string normal_set_problem(const Plantation& p, const std::vector<Transition>& set) {
  std::vector<VertexSet> verts;
  std::vector<std::vector<Edge>> edges;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (std::string why = transition_problem(p, set[i]); !why.empty()) {
      return "member " + std::to_string(i) + ": " + why;
    }
    const auto& vs = set[i].path.vertices;
    verts.push_back(vertex_set_of(p.g, vs));
    std::vector<Edge> es;
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) es.push_back({std::min(vs[k], vs[k + 1]), std::max(vs[k], vs[k + 1])});
    std::sort(es.begin(), es.end());
    edges.push_back(std::move(es));
  }
  for (std::size_t i = 0; i < set.size(); ++i) {
    const Path& a = set[i].path;
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const Path& b = set[j].path;
      const bool common_end = a.front() == b.front() || a.front() == b.back() || a.back() == b.front() ||
                              a.back() == b.back();
      if (!common_end && !anticomplete(p.g, verts[i], verts[j])) {
        return "members " + std::to_string(i) + " and " + std::to_string(j) + " touch without a common end";
      }
    }
    bool has_private = false;
    for (const Edge& e : edges[i]) {
      bool shared = false;
      for (std::size_t j = 0; j < set.size() && !shared; ++j) {
        if (j != i && std::binary_search(edges[j].begin(), edges[j].end(), e)) shared = true;
      }
      if (!shared) {
        has_private = true;
        break;
      }
    }
    if (!has_private) return "member " + std::to_string(i) + " has no private edge";
  }
  return {};
}

void ReductionTrace::append(const ReductionTrace& later) {
  exploded.insert(exploded.end(), later.exploded.begin(), later.exploded.end());
  deleted.insert(deleted.end(), later.deleted.begin(), later.deleted.end());
  contracted.insert(contracted.end(), later.contracted.begin(), later.contracted.end());
  maps.insert(maps.end(), later.maps.begin(), later.maps.end());
}

Plantation explode(const Plantation& p, int v, ReductionTrace* trace) {
  p.g.check_vertex(v);
  VertexSet x = p.g.empty_set();
  x.insert(v);
  return explode_all(p, x, trace);
}

Plantation explode_all(const Plantation& p, const VertexSet& x, ReductionTrace* trace) {
  p.g.check_set(x);
  if (!x.is_subset_of(p.z)) throw InputError("only vertices of Z can be exploded");
  VertexSet removed = x;
  x.for_each([&](int v) { removed |= p.g.neighborhood(v) - p.z; });
  std::vector<int> map;
  Plantation out = restrict_to(p, removed.complement(), map);
  if (trace) {
    x.for_each([&](int v) { trace->exploded.push_back(p.root_id(v)); });
    trace->maps.push_back(std::move(map));
  }
  return out;
}

Plantation delete_vertices(const Plantation& p, const VertexSet& y, ReductionTrace* trace) {
  p.g.check_set(y);
  if (y.intersects(p.z)) throw InputError("only vertices outside Z can be deleted");
  std::vector<int> map;
  Plantation out = restrict_to(p, y.complement(), map);
  if (trace) {
    y.for_each([&](int v) { trace->deleted.push_back(p.root_id(v)); });
    trace->maps.push_back(std::move(map));
  }
  return out;
}

Plantation contract(const Plantation& p, int z1, int z2, ReductionTrace* trace) {
  p.g.check_vertex(z1);
  p.g.check_vertex(z2);
  if (!p.z.contains(z1) || !p.z.contains(z2) || !p.g.adjacent(z1, z2)) {
    throw InputError("can only contract an edge inside Z");
  }
  if (p.g.neighborhood(z1).intersects(p.g.neighborhood(z2))) {
    throw std::logic_error("contraction would create parallel edges");
  }
  const int keep = std::min(z1, z2);
  const int gone = std::max(z1, z2);
  const int n = p.order();
  std::vector<int> to_new(static_cast<std::size_t>(n));
  std::vector<int> map;
  for (int v = 0, next = 0; v < n; ++v) {
    if (v == gone) continue;
    to_new[v] = next++;
    map.push_back(v);
  }
  to_new[gone] = to_new[keep];
  GraphBuilder b(n - 1);
  for (const Edge& e : p.g.edges()) {
    const int u = to_new[e.u];
    const int v = to_new[e.v];
    if (u != v) b.add_edge(u, v);
  }
  Plantation out;
  out.root = p.root;
  out.s = p.s;
  out.g = b.build();
  out.z = VertexSet(n - 1);
  for (int v = 0; v < n - 1; ++v) {
    const int old = map[static_cast<std::size_t>(v)];
    if (p.z.contains(old)) out.z.insert(v);
    std::vector<int> cls = p.classes[static_cast<std::size_t>(old)];
    if (old == keep) {
      const auto& extra = p.classes[static_cast<std::size_t>(gone)];
      cls.insert(cls.end(), extra.begin(), extra.end());
      std::sort(cls.begin(), cls.end());
    }
    out.classes.push_back(std::move(cls));
  }
  if (trace) {
    trace->contracted.emplace_back(p.root_id(keep), p.root_id(gone));
    trace->maps.push_back(std::move(map));
  }
  return out;
}

Cycle lift_cycle(const Plantation& p, const std::vector<int>& walk) {
  const std::size_t k = walk.size();
  if (k < 3 || !is_cycle(p.g, walk)) throw std::logic_error("lift_cycle needs a cycle of the current graph");
  const Graph& root = *p.root;
  std::vector<int> entry(k), exit(k);
  for (std::size_t i = 0; i < k; ++i) {
    const auto& from = p.classes[static_cast<std::size_t>(walk[i])];
    const auto& to = p.classes[static_cast<std::size_t>(walk[(i + 1) % k])];
    bool found = false;
    for (int a : from) {
      for (int b : to) {
        if (!found && root.adjacent(a, b)) {
          exit[i] = a;
          entry[(i + 1) % k] = b;
          found = true;
        }
      }
    }
    if (!found) throw std::logic_error("no root edge between consecutive classes");
  }
  std::vector<int> seq;
  for (std::size_t i = 0; i < k; ++i) {
    for (int v : path_inside(root, p.classes[static_cast<std::size_t>(walk[i])], entry[i], exit[i])) seq.push_back(v);
  }
  Cycle c = shortcut_to_induced(root, Cycle{std::move(seq)});
  if (!is_induced_cycle(root, c.vertices)) throw std::logic_error("lifted cycle is not induced");
  return c;
}

Transition to_root(const Plantation& p, const Transition& t) {
  Transition out;
  out.path.vertices = p.root_ids(t.path.vertices);
  out.feet = p.root_ids(t.feet);
  std::sort(out.feet.begin(), out.feet.end());
  return out;
}

}  // namespace anticycle
