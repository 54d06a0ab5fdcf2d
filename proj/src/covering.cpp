#include "anticycle/covering.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>

namespace anticycle {

EndMultiset end_multiset(const LinearForest& lf) {
  EndMultiset x;
  for (const Path& p : lf.components) {
    ++x[p.front()];
    ++x[p.back()];
  }
  return x;
}

namespace {

class Peeler {
 public:
  Peeler(const Graph& f, std::vector<int> mult) : f_(f), mult_(std::move(mult)), alive_(f.all_vertices()) {}

  std::optional<LinearForest> run() {
    while (true) {
      if (!trim()) return std::nullopt;
      if (alive_.empty()) break;
      const std::vector<int> comp = components(f_, alive_).front();
      const bool is_path = std::all_of(comp.begin(), comp.end(), [&](int v) { return degree(v) <= 2; });
      if (!(is_path ? peel_path(comp) : peel_shoots(comp))) return std::nullopt;
    }
    std::sort(out_.components.begin(), out_.components.end());
    return std::move(out_);
  }

 private:
  int degree(int v) const { return static_cast<int>(f_.neighborhood(v).intersection_size(alive_)); }

  void take(std::vector<int> seq) {
    for (int v : seq) alive_.erase(v);
    mult_[seq.front()] = 0;
    mult_[seq.back()] = 0;
    out_.components.push_back(canonical_path(Path{std::move(seq)}));
  }

  // Doubled vertices become components; unmarked leaves and isolated
  // vertices go. False when some vertex cannot be an end as required.
  bool trim() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int v = alive_.first(); v >= 0; v = alive_.next(v + 1)) {
        const int m = mult_[v];
        if (m >= 3) return false;
        if (m == 2) {
          take({v});
          changed = true;
          continue;
        }
        const int d = degree(v);
        if (d == 0 && m == 1) return false;
        if (d <= 1 && m == 0) {
          alive_.erase(v);
          changed = true;
        }
      }
    }
    return true;
  }

  int next_on_path(int prev, int cur) const {
    for (int w : f_.neighbors(cur)) {
      if (w != prev && alive_.contains(w)) return w;
    }
    return -1;
  }

  // Marked vertices pair up consecutively along the path.
  bool peel_path(const std::vector<int>& comp) {
    int start = comp.front();
    for (int v : comp) {
      if (degree(v) <= 1) {
        start = v;
        break;
      }
    }
    std::vector<int> order{start};
    for (int prev = -1, cur = start;;) {
      const int nxt = next_on_path(prev, cur);
      if (nxt < 0) break;
      order.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    std::vector<std::size_t> marked;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (mult_[order[i]] == 1) marked.push_back(i);
    }
    if (marked.size() % 2 != 0) return false;
    for (int v : comp) alive_.erase(v);
    for (std::size_t i = 0; i < marked.size(); i += 2) {
      std::vector<int> seq(order.begin() + static_cast<std::ptrdiff_t>(marked[i]),
                           order.begin() + static_cast<std::ptrdiff_t>(marked[i + 1]) + 1);
      mult_[seq.front()] = 0;
      mult_[seq.back()] = 0;
      out_.components.push_back(canonical_path(Path{std::move(seq)}));
    }
    return true;
  }

  bool peel_shoots(const std::vector<int>& comp) {
    struct Shoot {
      std::vector<int> seq;  // leaf first, inner end last
    };
    std::vector<Shoot> shoots;
    for (int leaf : comp) {
      if (degree(leaf) != 1) continue;
      std::vector<int> seq{leaf};
      int prev = leaf;
      int cur = next_on_path(-1, leaf);
      while (mult_[cur] == 0 && degree(cur) == 2) {
        seq.push_back(cur);
        const int nxt = next_on_path(prev, cur);
        prev = cur;
        cur = nxt;
      }
      seq.push_back(cur);
      if (mult_[cur] == 1) {
        take(std::move(seq));
        return true;
      }
      shoots.push_back({std::move(seq)});
    }
    VertexSet core = VertexSet::from(f_.order(), comp);
    for (const Shoot& sh : shoots) {
      for (std::size_t i = 0; i + 1 < sh.seq.size(); ++i) core.erase(sh.seq[i]);
    }
    for (int u = core.first(); u >= 0; u = core.next(u + 1)) {
      if (f_.neighborhood(u).intersection_size(core) > 1) continue;
      std::vector<const Shoot*> at_u;
      for (const Shoot& sh : shoots) {
        if (sh.seq.back() == u) at_u.push_back(&sh);
      }
      if (at_u.size() >= 3) return false;
      if (at_u.size() < 2) throw std::logic_error("linear forest peeling found a branch vertex with one shoot");
      std::vector<int> seq = at_u[0]->seq;
      seq.insert(seq.end(), at_u[1]->seq.rbegin() + 1, at_u[1]->seq.rend());
      take(std::move(seq));
      return true;
    }
    throw std::logic_error("linear forest peeling found no extremal branch vertex");
  }

  const Graph& f_;
  std::vector<int> mult_;
  VertexSet alive_;
  LinearForest out_;
};

// Some induced path on exactly `vs`, both ends in z, from its smaller end.
std::optional<Path> covering_path_on(const Graph& g, const VertexSet& z, const VertexSet& vs) {
  const std::vector<int> members = vs.members();
  std::vector<int> ends;
  std::size_t degree_sum = 0;
  for (int v : members) {
    const std::size_t d = g.neighborhood(v).intersection_size(vs);
    if (d > 2) return std::nullopt;
    if (d <= 1) ends.push_back(v);
    degree_sum += d;
  }
  if (degree_sum != 2 * (members.size() - 1)) return std::nullopt;
  if (members.size() == 1) ends.push_back(members.front());
  if (ends.size() != 2 || !z.contains(ends[0]) || !z.contains(ends[1])) return std::nullopt;
  std::vector<int> seq{ends[0]};
  for (int prev = -1, cur = ends[0]; seq.size() < members.size();) {
    int nxt = -1;
    for (int w : g.neighbors(cur)) {
      if (w != prev && vs.contains(w)) nxt = w;
    }
    if (nxt < 0) return std::nullopt;
    seq.push_back(nxt);
    prev = cur;
    cur = nxt;
  }
  return Path{std::move(seq)};
}

// Every covering path is fixed by the edges it uses between Z and G - Z:
// choose those edges per vertex of Z, then rebuild the part outside Z.
std::vector<Path> covering_paths(const Graph& g, const VertexSet& z) {
  std::vector<Path> out;
  const std::vector<int> zs = z.members();
  if (zs.empty()) return out;
  if (zs.size() == 1) {
    out.push_back(Path{{zs.front()}});
    return out;
  }
  std::vector<int> inner_degree;
  std::vector<std::vector<int>> outside;
  for (int v : zs) {
    inner_degree.push_back(static_cast<int>(g.neighborhood(v).intersection_size(z)));
    if (inner_degree.back() > 2) return out;
    outside.push_back((g.neighborhood(v) - z).members());
  }
  if (!find_cycle(g, z).empty()) return out;

  const Subgraph f = induced_subgraph(g, z.complement());
  std::vector<int> mult(static_cast<std::size_t>(g.order()), 0);
  std::size_t d_size = 0;
  int ends = 0;

  const auto leaf = [&] {
    std::vector<int> fm(static_cast<std::size_t>(f.graph.order()), 0);
    for (int v = 0; v < g.order(); ++v) {
      if (mult[v] > 0) fm[f.from_parent[v]] = mult[v];
    }
    const std::optional<LinearForest> lf = Peeler(f.graph, std::move(fm)).run();
    if (!lf) return;
    VertexSet vs = z;
    for (const Path& c : lf->components) {
      for (int v : c.vertices) vs.insert(f.to_parent[v]);
    }
    std::size_t crossing = 0;
    for (int v : zs) crossing += (g.neighborhood(v) - z).intersection_size(vs);
    if (crossing != d_size) return;
    if (std::optional<Path> p = covering_path_on(g, z, vs)) out.push_back(canonical_path(std::move(*p)));
  };

  const auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == zs.size()) {
      if (ends == 2) leaf();
      return;
    }
    const std::vector<int>& cand = outside[i];
    for (int total = 1; total <= 2; ++total) {
      const int k = total - inner_degree[i];
      if (k < 0 || k > static_cast<int>(cand.size())) continue;
      const int end_here = total == 1 ? 1 : 0;
      if (ends + end_here > 2) continue;
      ends += end_here;
      d_size += static_cast<std::size_t>(k);
      if (k == 0) {
        self(self, i + 1);
      } else {
        for (std::size_t a = 0; a < cand.size(); ++a) {
          if (mult[cand[a]] >= 2) continue;
          ++mult[cand[a]];
          if (k == 1) {
            self(self, i + 1);
          } else {
            for (std::size_t b = a + 1; b < cand.size(); ++b) {
              if (mult[cand[b]] >= 2) continue;
              ++mult[cand[b]];
              self(self, i + 1);
              --mult[cand[b]];
            }
          }
          --mult[cand[a]];
        }
      }
      d_size -= static_cast<std::size_t>(k);
      ends -= end_here;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// Vertex sets of the paths x1..y of G - Z that can precede `end` in an
// induced path whose middle is `middle`.
std::vector<VertexSet> stubs(const Graph& g, const VertexSet& forest, const VertexSet& middle, int end) {
  std::vector<VertexSet> out;
  const VertexSet free = forest - closed_neighborhood(g, middle);
  for (int x1 : g.neighbors(end)) {
    if (!forest.contains(x1) || g.neighborhood(x1).intersection_size(middle) != 1) continue;
    std::vector<int> parent(static_cast<std::size_t>(g.order()), -2);
    std::vector<VertexSet> set_of(static_cast<std::size_t>(g.order()));
    parent[x1] = -1;
    set_of[x1] = g.empty_set();
    set_of[x1].insert(x1);
    std::queue<int> q;
    q.push(x1);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      out.push_back(set_of[v]);
      for (int w : g.neighbors(v)) {
        if (!free.contains(w) || parent[w] != -2) continue;
        parent[w] = v;
        set_of[w] = set_of[v];
        set_of[w].insert(w);
        q.push(w);
      }
    }
  }
  return out;
}

}  // namespace

std::optional<LinearForest> reconstruct_linear_forest(const Graph& f, const EndMultiset& x) {
  if (!is_forest(f)) throw InputError("reconstruct_linear_forest needs a forest");
  std::vector<int> mult(static_cast<std::size_t>(f.order()), 0);
  long long total = 0;
  for (const auto& [v, m] : x) {
    f.check_vertex(v);
    if (m <= 0) throw InputError("end multiplicity of vertex " + std::to_string(v) + " is not positive");
    mult[v] = m;
    total += m;
  }
  if (total % 2 != 0) return std::nullopt;
  return Peeler(f, std::move(mult)).run();
}

std::vector<Path> enumerate_z_covering(const Plantation& p) { return covering_paths(p.g, p.z); }

BigCount count_z_covering(const Plantation& p) { return BigCount(covering_paths(p.g, p.z).size()); }

FinalCountCheck verify_finalcount_bound(const Plantation& p, const PhiTable& phi) {
  const int s = p.s;
  const long long fs = factorial(s);
  const long long ph = phi(s);
  FinalCountCheck out;
  out.d1 = 6 * (2 * ph + 7 * s - 4) + 4 * s * fs;
  out.d2 = 8 * fs * (2 * fs + s) * ph + 8;
  out.d3 = 4 * s * fs;
  out.n = count_z_covering(p);
  const long long exponent = out.d2 * static_cast<long long>(p.z.size()) + out.d3;
  out.bound = boost::multiprecision::pow(BigCount(p.order()), static_cast<unsigned>(out.d1)) *
              (BigCount(1) << static_cast<unsigned>(exponent));
  out.holds = out.n <= out.bound;
  return out;
}

BigCount count_induced_paths_via_z(const Graph& g, const VertexSet& z, int s) {
  make_plantation(g, z, s);
  const VertexSet forest = z.complement();
  BigCount total = 0;
  for (const std::vector<int>& comp : components(g, forest)) {
    const long long c = static_cast<long long>(comp.size());
    total += c * (c + 1) / 2;
  }
  const std::vector<int> zs = z.members();
  if (zs.size() >= 31) throw InputError("cycle-hitting set too large to split into subsets");
  for (unsigned mask = 1; mask < (1U << zs.size()); ++mask) {
    VertexSet zp = g.empty_set();
    for (std::size_t i = 0; i < zs.size(); ++i) {
      if (mask >> i & 1U) zp.insert(zs[i]);
    }
    const Subgraph sub = induced_subgraph(g, g.all_vertices() - (z - zp));
    VertexSet zsub = sub.graph.empty_set();
    zp.for_each([&](int v) { zsub.insert(sub.from_parent[v]); });
    for (const Path& mid : covering_paths(sub.graph, zsub)) {
      VertexSet middle = g.empty_set();
      for (int v : mid.vertices) middle.insert(sub.to_parent[v]);
      const int a = sub.to_parent[mid.front()];
      const int b = sub.to_parent[mid.back()];
      const std::vector<VertexSet> sa = stubs(g, forest, middle, a);
      if (a == b) {
        total += 1 + static_cast<long long>(sa.size());
        for (std::size_t i = 0; i < sa.size(); ++i) {
          for (std::size_t j = i + 1; j < sa.size(); ++j) {
            if (anticomplete(g, sa[i], sa[j])) total += 1;
          }
        }
      } else {
        const std::vector<VertexSet> sb = stubs(g, forest, middle, b);
        total += 1 + static_cast<long long>(sa.size() + sb.size());
        for (const VertexSet& x : sa) {
          for (const VertexSet& y : sb) {
            if (anticomplete(g, x, y)) total += 1;
          }
        }
      }
    }
  }
  return total;
}

}  // namespace anticycle
