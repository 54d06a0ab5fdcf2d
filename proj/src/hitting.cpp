#include "anticycle/hitting.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace anticycle {

namespace {

// Multiplicities capped at two: a third parallel edge never changes which
// vertex sets are covers.
class FvsWork {
 public:
  explicit FvsWork(const Multigraph& h)
      : alive_(static_cast<std::size_t>(h.order()), 1),
        loop_(static_cast<std::size_t>(h.order()), 0),
        adj_(static_cast<std::size_t>(h.order())) {
    for (const MultiEdge& e : h.edges()) add(e.u, e.v);
  }

  int order() const { return static_cast<int>(alive_.size()); }
  bool alive(int v) const { return alive_[v] != 0; }
  bool has_loop(int v) const { return loop_[v] != 0; }
  const std::map<int, int>& adj(int v) const { return adj_[v]; }

  int degree(int v) const {
    int d = 0;
    for (const auto& [u, m] : adj_[v]) d += m;
    return d;
  }

  void add(int u, int w) {
    if (u == w) {
      loop_[u] = 1;
      return;
    }
    int& m = adj_[u][w];
    m = std::min(m + 1, 2);
    adj_[w][u] = m;
  }

  void remove(int v) {
    for (const auto& [u, m] : adj_[v]) adj_[u].erase(v);
    adj_[v].clear();
    alive_[v] = 0;
    loop_[v] = 0;
  }

  // Loops force their vertex; degree <= 1 vertices go; degree-2 vertices are
  // bypassed. Forced vertices are appended to `forced`.
  void reduce(std::vector<int>& forced) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = 0; v < order(); ++v) {
        if (!alive(v)) continue;
        if (has_loop(v)) {
          forced.push_back(v);
          remove(v);
          changed = true;
          continue;
        }
        const int d = degree(v);
        if (d <= 1) {
          remove(v);
          changed = true;
        } else if (d == 2) {
          const int u = adj_[v].begin()->first;
          const int w = adj_[v].size() == 1 ? u : std::next(adj_[v].begin())->first;
          remove(v);
          add(u, w);
          changed = true;
        }
      }
    }
  }

  bool empty() const {
    for (int v = 0; v < order(); ++v) {
      if (alive(v)) return false;
    }
    return true;
  }

  // Removing X leaves a forest, so sum over X of (deg - 1) >= m - n.
  int lower_bound() const {
    long long n = 0;
    long long m2 = 0;
    std::vector<int> degs;
    for (int v = 0; v < order(); ++v) {
      if (!alive(v)) continue;
      ++n;
      const int d = degree(v);
      m2 += d;
      degs.push_back(d);
    }
    long long need = m2 / 2 - n;
    if (need <= 0) return need == 0 && n > 0 ? 1 : 0;
    std::sort(degs.rbegin(), degs.rend());
    int k = 0;
    for (int d : degs) {
      if (need <= 0) break;
      need -= d - 1;
      ++k;
    }
    return k;
  }

  std::vector<int> shortest_cycle() const {
    for (int v = 0; v < order(); ++v) {
      for (const auto& [u, m] : adj_[v]) {
        if (m >= 2 && v < u) return {v, u};
      }
    }
    std::vector<int> best;
    const int n = order();
    std::vector<int> dist(static_cast<std::size_t>(n)), parent(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
      if (!alive(r)) continue;
      std::fill(dist.begin(), dist.end(), -1);
      dist[r] = 0;
      parent[r] = -1;
      std::queue<int> q;
      q.push(r);
      bool done = false;
      while (!q.empty() && !done) {
        const int x = q.front();
        q.pop();
        for (const auto& [y, m] : adj_[x]) {
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            parent[y] = x;
            q.push(y);
          } else if (y != parent[x]) {
            const int len = dist[x] + dist[y] + 1;
            if (best.empty() || len < static_cast<int>(best.size())) {
              std::vector<int> left, right;
              for (int a = x; a >= 0; a = parent[a]) left.push_back(a);
              for (int b = y; b >= 0; b = parent[b]) right.push_back(b);
              right.pop_back();
              std::reverse(right.begin(), right.end());
              left.insert(left.end(), right.begin(), right.end());
              best = std::move(left);
            }
            done = true;
            break;
          }
        }
      }
    }
    return best;
  }

 private:
  std::vector<char> alive_;
  std::vector<char> loop_;
  std::vector<std::map<int, int>> adj_;
};

class FvsSearch {
 public:
  explicit FvsSearch(std::uint64_t max_nodes) : max_nodes_(max_nodes) {}

  bool run(FvsWork w, int k, std::vector<int>& sol) {
    if (++nodes_ > max_nodes_) {
      throw CapExceeded("max-fvs-nodes", "feedback vertex set search exceeded " + std::to_string(max_nodes_) + " nodes");
    }
    std::vector<int> forced;
    w.reduce(forced);
    if (static_cast<int>(forced.size()) > k) return false;
    k -= static_cast<int>(forced.size());
    if (w.empty()) {
      sol = std::move(forced);
      return true;
    }
    if (k == 0 || w.lower_bound() > k) return false;
    std::vector<int> cycle = w.shortest_cycle();
    std::stable_sort(cycle.begin(), cycle.end(), [&](int a, int b) {
      const int da = w.degree(a), db = w.degree(b);
      return da != db ? da > db : a < b;
    });
    for (int c : cycle) {
      FvsWork next = w;
      next.remove(c);
      std::vector<int> sub;
      if (run(std::move(next), k - 1, sub)) {
        sol = std::move(forced);
        sol.push_back(c);
        sol.insert(sol.end(), sub.begin(), sub.end());
        return true;
      }
    }
    return false;
  }

 private:
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
};

Graph underlying_simple(const Multigraph& h) {
  GraphBuilder b(h.order());
  for (const MultiEdge& e : h.edges()) {
    if (e.u != e.v) b.add_edge(e.u, e.v);
  }
  return b.build();
}

std::map<std::pair<int, int>, std::vector<std::uint64_t>> labels_by_pair(const Multigraph& h) {
  std::map<std::pair<int, int>, std::vector<std::uint64_t>> out;
  for (const MultiEdge& e : h.edges()) out[{std::min(e.u, e.v), std::max(e.u, e.v)}].push_back(e.label);
  for (auto& [key, ls] : out) std::sort(ls.begin(), ls.end());
  return out;
}

bool disjoint_search(const std::vector<VertexSet>& sets, std::size_t from, int need, VertexSet& used,
                     std::vector<std::size_t>& chosen) {
  if (need == 0) return true;
  for (std::size_t i = from; i < sets.size(); ++i) {
    if (sets.size() - i < static_cast<std::size_t>(need)) return false;
    if (sets[i].intersects(used)) continue;
    chosen.push_back(i);
    used |= sets[i];
    if (disjoint_search(sets, i + 1, need - 1, used, chosen)) return true;
    used -= sets[i];
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::string multicycle_problem(const Multigraph& h, const MultiCycle& c) {
  const std::size_t k = c.vertices.size();
  if (k == 0 || c.labels.size() != k) return "cycle needs as many labels as vertices";
  std::set<int> vs(c.vertices.begin(), c.vertices.end());
  std::set<std::uint64_t> ls(c.labels.begin(), c.labels.end());
  if (vs.size() != k || ls.size() != k) return "repeated vertex or label";
  std::map<std::uint64_t, const MultiEdge*> by_label;
  for (const MultiEdge& e : h.edges()) by_label[e.label] = &e;
  for (std::size_t i = 0; i < k; ++i) {
    const auto it = by_label.find(c.labels[i]);
    if (it == by_label.end()) return "unknown label " + std::to_string(c.labels[i]);
    const int a = c.vertices[i];
    const int b = c.vertices[(i + 1) % k];
    const MultiEdge& e = *it->second;
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) {
      return "label " + std::to_string(c.labels[i]) + " does not join consecutive vertices";
    }
  }
  return {};
}

bool is_cycle_cover(const Multigraph& h, const VertexSet& x) {
  std::vector<int> parent(static_cast<std::size_t>(h.order()));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const MultiEdge& e : h.edges()) {
    if (x.contains(e.u) || x.contains(e.v)) continue;
    const int a = find(e.u);
    const int b = find(e.v);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

VertexSet minimum_feedback_vertex_set(const Multigraph& h, const HittingOptions& opts) {
  FvsSearch search(opts.max_nodes);
  const FvsWork start(h);
  for (int k = 0; k <= h.order(); ++k) {
    std::vector<int> sol;
    if (search.run(start, k, sol)) {
      VertexSet out = VertexSet::from(h.order(), sol);
      if (!is_cycle_cover(h, out)) throw std::logic_error("feedback vertex set search returned a non-cover");
      return out;
    }
  }
  throw std::logic_error("no feedback vertex set found");
}

std::optional<std::vector<MultiCycle>> find_disjoint_cycles(const Multigraph& h, int s, const HittingOptions& opts) {
  if (s < 1) throw InputError("s must be at least 1");
  const int n = h.order();
  const auto labels = labels_by_pair(h);
  struct Candidate {
    std::vector<int> order;  // cyclic order
    VertexSet set;
  };
  std::vector<Candidate> cands;
  for (const auto& [key, ls] : labels) {
    if (key.first == key.second) {
      cands.push_back({{key.first}, VertexSet(n, {key.first})});
    } else if (ls.size() >= 2) {
      cands.push_back({{key.first, key.second}, VertexSet(n, {key.first, key.second})});
    }
  }
  const Graph simple = underlying_simple(h);
  std::size_t seen = 0;
  for_each_induced_cycle(simple, [&](const Cycle& c) {
    if (++seen > opts.max_cycles) {
      throw CapExceeded("max-cycles", "more than " + std::to_string(opts.max_cycles) + " induced cycles");
    }
    cands.push_back({c.vertices, vertex_set_of(simple, c.vertices)});
    return true;
  });
  std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    if (a.order.size() != b.order.size()) return a.order.size() < b.order.size();
    return a.set.members() < b.set.members();
  });
  std::vector<VertexSet> sets;
  for (const Candidate& c : cands) sets.push_back(c.set);
  VertexSet used(n);
  std::vector<std::size_t> chosen;
  if (!disjoint_search(sets, 0, s, used, chosen)) return std::nullopt;

  std::vector<MultiCycle> out;
  for (std::size_t i : chosen) {
    const auto& vs = cands[i].order;
    MultiCycle mc{vs, {}};
    if (vs.size() == 1) {
      mc.labels.push_back(labels.at({vs[0], vs[0]}).front());
    } else if (vs.size() == 2) {
      const auto& ls = labels.at({std::min(vs[0], vs[1]), std::max(vs[0], vs[1])});
      mc.labels = {ls[0], ls[1]};
    } else {
      for (std::size_t k = 0; k < vs.size(); ++k) {
        const int a = vs[k];
        const int b = vs[(k + 1) % vs.size()];
        mc.labels.push_back(labels.at({std::min(a, b), std::max(a, b)}).front());
      }
    }
    out.push_back(std::move(mc));
  }
  return out;
}

PackOrCover pack_or_cover(const Multigraph& h, int s, const PhiTable& phi, const HittingOptions& opts) {
  PackOrCover out;
  if (auto packing = find_disjoint_cycles(h, s, opts)) {
    out.packing = std::move(*packing);
    return out;
  }
  VertexSet cover = minimum_feedback_vertex_set(h, opts);
  const int limit = phi(s);
  if (static_cast<int>(cover.size()) > limit) {
    throw PhiTableError("minimum cover has " + std::to_string(cover.size()) + " vertices but phi(" + std::to_string(s) +
                        ") = " + std::to_string(limit) + " and no " + std::to_string(s) +
                        " disjoint cycles exist; the configured table is too small");
  }
  out.cover = std::move(cover);
  return out;
}

Multigraph as_multigraph(const Graph& g) {
  Multigraph h(g.order());
  for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
  return h;
}

Multigraph feet_multigraph(const Plantation& p, const std::vector<Transition>& ts) {
  const std::vector<int> zs = p.z.members();
  std::vector<int> index(static_cast<std::size_t>(p.order()), -1);
  for (std::size_t i = 0; i < zs.size(); ++i) index[zs[i]] = static_cast<int>(i);
  Multigraph h(static_cast<int>(zs.size()));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto& feet = ts[i].feet;
    if (feet.empty() || feet.size() > 2) {
      throw InputError("transition " + std::to_string(i) + " does not have one or two feet");
    }
    for (int f : feet) {
      if (f < 0 || f >= p.order() || index[f] < 0) throw InputError("transition foot outside Z");
    }
    h.add_edge(index[feet.front()], index[feet.back()], i);
  }
  return h;
}

EpOutcome apply_ep(const Plantation& p, const std::vector<Transition>& normal, const PhiTable& phi,
                   const HittingOptions& opts) {
  if (!is_monic(p)) throw InputError("plantation is not monic");
  if (std::string why = normal_set_problem(p, normal); !why.empty()) throw InputError("set is not normal: " + why);
  const std::vector<int> zs = p.z.members();
  const Multigraph h = feet_multigraph(p, normal);
  PackOrCover poc = pack_or_cover(h, p.s, phi, opts);
  EpOutcome out;
  out.x = p.g.empty_set();
  if (poc.is_packing()) {
    PackingWitness w;
    for (const MultiCycle& mc : poc.packing) {
      const std::size_t m = mc.vertices.size();
      std::vector<int> walk;
      if (m == 1) {
        walk = normal[mc.labels[0]].path.vertices;
        walk.push_back(zs[mc.vertices[0]]);
      } else {
        // P_i^+ runs u_i, P_i, u_{i+1}; drop a private edge of P_1 and close
        // it through the rest.
        std::set<Edge> edges;
        std::vector<Edge> first;
        for (std::size_t i = 0; i < m; ++i) {
          const int u = zs[mc.vertices[i]];
          const int u_next = zs[mc.vertices[(i + 1) % m]];
          std::vector<int> seq = normal[mc.labels[i]].path.vertices;
          if (!p.g.adjacent(u, seq.front())) std::reverse(seq.begin(), seq.end());
          seq.insert(seq.begin(), u);
          seq.push_back(u_next);
          for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
            const Edge e{std::min(seq[k], seq[k + 1]), std::max(seq[k], seq[k + 1])};
            edges.insert(e);
            if (i == 0 && k > 0 && k + 2 < seq.size()) first.push_back(e);
          }
        }
        std::set<Edge> others;
        for (std::size_t i = 1; i < m; ++i) {
          const auto& vs = normal[mc.labels[i]].path.vertices;
          for (std::size_t k = 0; k + 1 < vs.size(); ++k) others.insert({std::min(vs[k], vs[k + 1]), std::max(vs[k], vs[k + 1])});
        }
        const auto priv = std::find_if(first.begin(), first.end(), [&](const Edge& e) { return !others.count(e); });
        if (priv == first.end()) throw std::logic_error("normal transition without a private edge");
        const Edge e = *priv;
        edges.erase(e);
        std::map<int, std::vector<int>> adj;
        for (const Edge& f : edges) {
          adj[f.u].push_back(f.v);
          adj[f.v].push_back(f.u);
        }
        std::map<int, int> parent{{e.u, e.u}};
        std::queue<int> q;
        q.push(e.u);
        while (!q.empty() && !parent.count(e.v)) {
          const int x = q.front();
          q.pop();
          for (int y : adj[x]) {
            if (!parent.count(y)) {
              parent[y] = x;
              q.push(y);
            }
          }
        }
        if (!parent.count(e.v)) throw std::logic_error("private edge ends are not reconnected");
        for (int x = e.v; x != e.u; x = parent[x]) walk.push_back(x);
        walk.push_back(e.u);
      }
      w.cycles.push_back(lift_cycle(p, walk));
    }
    if (std::string why = witness_problem(*p.root, w, p.s); !why.empty()) {
      throw std::logic_error("lifted packing is not a witness: " + why);
    }
    out.witness = std::move(w);
    return out;
  }
  poc.cover->for_each([&](int i) { out.x.insert(zs[static_cast<std::size_t>(i)]); });
  for (const Transition& t : normal) {
    bool hit = false;
    for (int f : t.feet) hit = hit || out.x.contains(f);
    if (!hit) out.uncovered.push_back(t);
  }
  if (out.uncovered.size() > zs.size()) throw std::logic_error("more uncovered transitions than vertices of Z");
  return out;
}

}  // namespace anticycle
