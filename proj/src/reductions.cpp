#include "anticycle/reductions.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

#include "anticycle/forest.hpp"

namespace anticycle {

namespace {

struct ForestView {
  Subgraph sub;

  explicit ForestView(const Plantation& p) : sub(induced_subgraph(p.g, p.forest_vertices())) {}

  Path to_forest(const Path& path) const {
    Path out;
    for (int v : path.vertices) out.vertices.push_back(sub.from_parent[static_cast<std::size_t>(v)]);
    return out;
  }
  Path from_forest(const Path& path) const {
    Path out;
    for (int v : path.vertices) out.vertices.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
    return out;
  }
};

std::vector<VertexSet> path_sets(const Graph& g, const std::vector<Transition>& ts) {
  std::vector<VertexSet> out;
  out.reserve(ts.size());
  for (const Transition& t : ts) out.push_back(vertex_set_of(g, t.path.vertices));
  return out;
}

std::vector<int> oriented_from(const Plantation& p, const Path& path, int z) {
  std::vector<int> seq = path.vertices;
  if (!p.g.adjacent(z, seq.front())) std::reverse(seq.begin(), seq.end());
  return seq;
}

PackingWitness validated(const Plantation& p, PackingWitness w, const char* where) {
  if (std::string why = witness_problem(*p.root, w, p.s); !why.empty()) {
    throw std::logic_error(std::string(where) + " built an invalid witness: " + why);
  }
  return w;
}

// Colour classes of a forest, each tree coloured from its lowest id.
std::vector<int> two_colouring(const Graph& g, const VertexSet& within) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  within.for_each([&](int r) {
    if (colour[r] >= 0) return;
    colour[r] = 0;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (within.contains(w) && colour[w] < 0) {
          colour[w] = 1 - colour[v];
          q.push(w);
        }
      }
    }
  });
  return colour;
}

VertexSet binary_vertices(const Plantation& p) {
  VertexSet out = p.g.empty_set();
  const VertexSet f = p.forest_vertices();
  f.for_each([&](int v) {
    if (p.z_degree(v) == 2) out.insert(v);
  });
  return out;
}

}  // namespace

BoundCheck check_at_most(std::string name, const BigCount& lhs, const BigCount& rhs) {
  return BoundCheck{std::move(name), lhs, rhs, lhs <= rhs};
}

bool Reduction::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

bool BoundaryReport::all_hold() const {
  if (!std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; })) return false;
  for (const Stage& st : stages) {
    if (!std::all_of(st.checks.begin(), st.checks.end(), [](const BoundCheck& c) { return c.holds; })) return false;
  }
  return true;
}

PackingWitness lift_witness(const Plantation& p, const PackingWitness& w) {
  PackingWitness out;
  for (const Cycle& c : w.cycles) out.cycles.push_back(lift_cycle(p, c.vertices));
  return out;
}

Reduction make_selfless(const Plantation& p, const ReduceOptions& opts) {
  (void)opts;
  if (!is_monic(p)) throw InputError("make_selfless needs a monic plantation");
  const int s = p.s;
  const long long k = factorial(s);
  Reduction out;

  // Vertices of Z with s! pairwise anticomplete self-transitions.
  std::vector<Transition> selfs = self_transitions(p);
  std::map<int, std::vector<Transition>> by_foot;
  for (const Transition& t : selfs) by_foot[t.feet.front()].push_back(t);
  std::vector<std::pair<int, std::vector<Transition>>> important;
  for (const auto& [z, ts] : by_foot) {
    if (static_cast<long long>(ts.size()) < k) continue;
    if (auto pick = find_anticomplete_family(p.g, path_sets(p.g, ts), static_cast<int>(k))) {
      std::vector<Transition> fam;
      for (std::size_t i : *pick) fam.push_back(ts[i]);
      important.emplace_back(z, std::move(fam));
    }
  }

  if (static_cast<int>(important.size()) >= s) {
    const ForestView fv(p);
    std::vector<std::vector<Path>> families;
    for (int i = 0; i < s; ++i) {
      std::vector<Path> fam;
      for (const Transition& t : important[i].second) fam.push_back(fv.to_forest(t.path));
      families.push_back(std::move(fam));
    }
    const auto chosen = select_anticomplete_paths(fv.sub.graph, families, 1);
    PackingWitness w;
    for (int i = 0; i < s; ++i) {
      std::vector<int> walk = fv.from_forest(chosen[i][0]).vertices;
      walk.push_back(important[i].first);
      w.cycles.push_back(lift_cycle(p, walk));
    }
    out.witness = validated(p, std::move(w), "make_selfless");
    return out;
  }

  VertexSet x = p.g.empty_set();
  for (const auto& entry : important) x.insert(entry.first);
  Plantation p1 = explode_all(p, x, &out.trace);

  const std::vector<Transition> rest = self_transitions(p1);
  const ForestView fv(p1);
  SubtreeFamily fam{fv.sub.graph, {}};
  for (const Transition& t : rest) fam.members.push_back(vertex_set_of(fv.sub.graph, fv.to_forest(t.path).vertices));
  const int n = static_cast<int>(s * k);
  const SubtreeHitting hit = subtree_hitting_set(fam, n, SubtreeMode::Anticomplete);
  if (hit.is_packing()) {
    // No foot carries s! of them, so s distinct feet appear.
    PackingWitness w;
    std::vector<int> feet_used;
    for (std::size_t i : hit.packing) {
      const Transition& t = rest[i];
      const int z = t.feet.front();
      if (std::find(feet_used.begin(), feet_used.end(), z) != feet_used.end()) continue;
      feet_used.push_back(z);
      std::vector<int> walk = t.path.vertices;
      walk.push_back(z);
      w.cycles.push_back(lift_cycle(p1, walk));
      if (static_cast<int>(w.cycles.size()) == s) break;
    }
    if (static_cast<int>(w.cycles.size()) < s) throw std::logic_error("too few distinct feet among anticomplete self-transitions");
    out.witness = validated(p, std::move(w), "make_selfless");
    return out;
  }
  VertexSet y = p1.g.empty_set();
  hit.hit->for_each([&](int v) { y.insert(fv.sub.to_parent[static_cast<std::size_t>(v)]); });
  out.result = delete_vertices(p1, y, &out.trace);
  if (!is_selfless(out.result)) throw std::logic_error("self-transitions survived the hitting set");
  out.checks.push_back(check_at_most("selfless.|X| < s", static_cast<long long>(out.trace.exploded.size()), s - 1));
  out.checks.push_back(
      check_at_most("selfless.|Y| < 2s*s!", static_cast<long long>(out.trace.deleted.size()), 2 * s * k - 1));
  return out;
}

Reduction reduce_thickness(const Plantation& p, const ReduceOptions& opts) {
  (void)opts;
  if (!is_monic(p)) throw InputError("reduce_thickness needs a monic plantation");
  const int s = p.s;
  const long long fs = factorial(s);
  const long long link_size = 2 * fs;
  const long long star_size = 2 * fs + s;
  Reduction out;

  std::map<std::pair<int, int>, std::vector<Transition>> by_pair;
  for (const Transition& t : transitions(p)) {
    if (t.feet.size() == 1) throw InputError("reduce_thickness needs a selfless plantation");
    if (t.feet.size() == 2) by_pair[{t.feet[0], t.feet[1]}].push_back(t);
  }

  struct Linkage {
    int z1, z2;
    std::vector<Transition> members;
  };
  struct Star {
    int z1, z2;
    int centre;
    std::vector<Transition> members;
  };
  std::vector<Linkage> linkages;
  std::vector<Star> stars;
  for (const auto& [pair, ts] : by_pair) {
    if (static_cast<long long>(ts.size()) >= link_size) {
      if (auto pick = find_anticomplete_family(p.g, path_sets(p.g, ts), static_cast<int>(link_size))) {
        Linkage l{pair.first, pair.second, {}};
        for (std::size_t i : *pick) l.members.push_back(ts[i]);
        linkages.push_back(std::move(l));
      }
    }
    if (static_cast<long long>(ts.size()) >= star_size) {
      std::map<int, int> ends;
      for (const Transition& t : ts) {
        ++ends[t.path.front()];
        ++ends[t.path.back()];
      }
      int centre = -1;
      int best = 0;
      for (const auto& [v, c] : ends) {
        if (c > best) {
          best = c;
          centre = v;
        }
      }
      if (best >= star_size) {
        Star st{pair.first, pair.second, centre, {}};
        for (const Transition& t : ts) {
          if (t.path.front() == centre || t.path.back() == centre) st.members.push_back(t);
        }
        stars.push_back(std::move(st));
      }
    }
  }

  // Greedy maximal matchings: every linkage (star) pair keeps a foot in X1 (X2).
  const auto match = [](const auto& items) {
    std::vector<std::size_t> chosen;
    std::vector<int> used;
    for (std::size_t i = 0; i < items.size(); ++i) {
      const int a = items[i].z1, b = items[i].z2;
      if (std::find(used.begin(), used.end(), a) != used.end() || std::find(used.begin(), used.end(), b) != used.end()) {
        continue;
      }
      used.push_back(a);
      used.push_back(b);
      chosen.push_back(i);
    }
    return chosen;
  };
  const std::vector<std::size_t> m1 = match(linkages);
  const std::vector<std::size_t> m2 = match(stars);
  const ForestView fv(p);

  if (static_cast<int>(m1.size()) >= s) {
    std::vector<std::vector<Path>> families;
    for (int i = 0; i < s; ++i) {
      std::vector<Path> fam;
      for (const Transition& t : linkages[m1[i]].members) fam.push_back(fv.to_forest(t.path));
      families.push_back(std::move(fam));
    }
    const auto chosen = select_anticomplete_paths(fv.sub.graph, families, 2);
    PackingWitness w;
    for (int i = 0; i < s; ++i) {
      const Linkage& l = linkages[m1[i]];
      std::vector<int> walk = oriented_from(p, fv.from_forest(chosen[i][0]), l.z1);
      walk.push_back(l.z2);
      std::vector<int> back = oriented_from(p, fv.from_forest(chosen[i][1]), l.z2);
      walk.insert(walk.end(), back.begin(), back.end());
      walk.push_back(l.z1);
      w.cycles.push_back(lift_cycle(p, walk));
    }
    out.witness = validated(p, std::move(w), "reduce_thickness");
    return out;
  }

  if (static_cast<int>(m2.size()) >= 2 * s) {
    const std::vector<int> colour = two_colouring(p.g, p.forest_vertices());
    std::vector<std::size_t> side[2];
    for (std::size_t i : m2) side[colour[stars[i].centre]].push_back(i);
    const std::vector<std::size_t>& pick = side[0].size() >= side[1].size() ? side[0] : side[1];
    std::vector<std::size_t> use(pick.begin(), pick.begin() + s);
    std::vector<std::vector<Path>> families;
    for (std::size_t i : use) {
      const Star& st = stars[i];
      std::vector<Path> fam;
      for (const Transition& t : st.members) {
        bool touches = false;
        for (std::size_t j : use) {
          if (j != i && p.g.neighborhood(stars[j].centre).intersects(vertex_set_of(p.g, t.path.vertices))) touches = true;
        }
        if (touches) continue;
        std::vector<int> trunc = t.path.vertices;
        if (trunc.front() != st.centre) std::reverse(trunc.begin(), trunc.end());
        trunc.erase(trunc.begin());
        fam.push_back(fv.to_forest(Path{trunc}));
        if (static_cast<long long>(fam.size()) == link_size) break;
      }
      if (static_cast<long long>(fam.size()) < link_size) throw std::logic_error("star lost too many members");
      families.push_back(std::move(fam));
    }
    const auto chosen = select_anticomplete_paths(fv.sub.graph, families, 2);
    PackingWitness w;
    for (int i = 0; i < s; ++i) {
      const Star& st = stars[use[i]];
      const int far = p.g.adjacent(st.z1, st.centre) ? st.z2 : st.z1;
      std::vector<int> walk{st.centre};
      std::vector<int> q1 = fv.from_forest(chosen[i][0]).vertices;
      if (!p.g.adjacent(st.centre, q1.front())) std::reverse(q1.begin(), q1.end());
      walk.insert(walk.end(), q1.begin(), q1.end());
      walk.push_back(far);
      std::vector<int> q2 = fv.from_forest(chosen[i][1]).vertices;
      if (!p.g.adjacent(far, q2.front())) std::reverse(q2.begin(), q2.end());
      walk.insert(walk.end(), q2.begin(), q2.end());
      w.cycles.push_back(lift_cycle(p, walk));
    }
    out.witness = validated(p, std::move(w), "reduce_thickness");
    return out;
  }

  VertexSet x = p.g.empty_set();
  for (std::size_t i : m1) {
    x.insert(linkages[i].z1);
    x.insert(linkages[i].z2);
  }
  for (std::size_t i : m2) {
    x.insert(stars[i].z1);
    x.insert(stars[i].z2);
  }
  out.result = explode_all(p, x, &out.trace);
  out.checks.push_back(check_at_most("thin.|X| <= 6s-4", static_cast<long long>(out.trace.exploded.size()), 6 * s - 4));
  out.checks.push_back(check_at_most("thin.thickness <= 2s!(2s!+s)", thickness(out.result), link_size * star_size));
  return out;
}

std::vector<Transition> normal_transition_set(const Plantation& p) {
  const VertexSet n = p.frontier();
  std::vector<Transition> out;
  std::vector<int> parent(static_cast<std::size_t>(p.order()), -1);
  for (const std::vector<int>& comp : components(p.g, p.forest_vertices())) {
    std::vector<int> ns;
    for (int v : comp) {
      if (n.contains(v)) ns.push_back(v);
    }
    if (ns.size() < 2) {
      throw InputError("the component of G - Z containing vertex " + std::to_string(comp.front()) + " has " +
                       std::to_string(ns.size()) + " vertices of N; at least two are needed");
    }
    const int r = ns.front();
    parent[r] = r;
    std::queue<int> q;
    q.push(r);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : p.g.neighbors(v)) {
        if (!p.z.contains(w) && parent[w] < 0) {
          parent[w] = v;
          q.push(w);
        }
      }
    }
    std::vector<Transition> bucket[3];
    for (int a : ns) {
      if (a == r) continue;
      std::vector<int> seq{a};
      int v = parent[a];
      while (!n.contains(v)) {
        seq.push_back(v);
        v = parent[v];
      }
      seq.push_back(v);
      int height = 1;
      for (int u = v;; u = parent[u]) {
        if (n.contains(u)) ++height;
        if (u == r) break;
      }
      Transition t;
      t.path = canonical_path(Path{std::move(seq)});
      VertexSet feet = (p.g.neighborhood(t.path.front()) | p.g.neighborhood(t.path.back())) & p.z;
      t.feet = feet.members();
      bucket[height % 3].push_back(std::move(t));
    }
    int best = 0;
    for (int i = 1; i < 3; ++i) {
      if (bucket[i].size() > bucket[best].size()) best = i;
    }
    out.insert(out.end(), bucket[best].begin(), bucket[best].end());
  }
  std::sort(out.begin(), out.end());
  if (std::string why = normal_set_problem(p, out); !why.empty()) {
    throw std::logic_error("constructed transition set is not normal: " + why);
  }
  if (4 * out.size() < n.size()) throw std::logic_error("normal transition set is smaller than |N|/4");
  return out;
}

Reduction make_dyadic(const Plantation& p) {
  Reduction out;
  Plantation cur = p;
  while (true) {
    VertexSet del = cur.g.empty_set();
    cur.forest_vertices().for_each([&](int v) {
      const VertexSet zn = cur.g.neighborhood(v) & cur.z;
      const std::size_t d = zn.size();
      if (d >= 3) del.insert(v);
      if (d == 2) {
        const int a = zn.first();
        if (cur.g.adjacent(a, zn.next(a + 1))) del.insert(v);
      }
    });
    if (!del.empty()) cur = delete_vertices(cur, del, &out.trace);

    bool triangle = false;
    int cu = -1, cv = -1;
    for (const Edge& e : cur.g.edges()) {
      if (!cur.z.contains(e.u) || !cur.z.contains(e.v)) continue;
      if (cu < 0) {
        cu = e.u;
        cv = e.v;
      }
      if ((cur.g.neighborhood(e.u) & cur.g.neighborhood(e.v)).intersects(cur.z)) triangle = true;
    }
    if (triangle) {
      out.count_zero = true;
      break;
    }
    if (cu < 0) break;
    cur = contract(cur, cu, cv, &out.trace);
  }
  out.checks.push_back(check_at_most("dyadic.|G'| <= |G|", cur.order(), p.order()));
  out.checks.push_back(check_at_most("dyadic.|Z'| <= |Z|", static_cast<long long>(cur.z.size()), static_cast<long long>(p.z.size())));
  if (!out.count_zero && !is_dyadic(cur)) throw std::logic_error("make_dyadic left a non-dyadic plantation");
  out.result = std::move(cur);
  return out;
}

Reduction reduce_binary(const Plantation& p, const ReduceOptions& opts) {
  if (!is_dyadic(p)) throw InputError("reduce_binary needs a dyadic plantation");
  const int s = p.s;
  const long long zsize = static_cast<long long>(p.z.size());
  Reduction out;
  const VertexSet n2 = binary_vertices(p);
  if (static_cast<long long>(n2.size()) <= 2 * zsize) {
    out.result = p;
  } else {
    const std::vector<int> zs = p.z.members();
    std::vector<int> index(static_cast<std::size_t>(p.order()), -1);
    for (std::size_t i = 0; i < zs.size(); ++i) index[zs[i]] = static_cast<int>(i);
    const std::vector<int> colour = two_colouring(p.g, p.forest_vertices());
    VertexSet x = p.g.empty_set();
    for (int c = 0; c < 2; ++c) {
      Multigraph h(static_cast<int>(zs.size()));
      n2.for_each([&](int y) {
        if (colour[y] != c) return;
        const VertexSet zn = p.g.neighborhood(y) & p.z;
        const int a = zn.first();
        h.add_edge(index[a], index[zn.next(a + 1)], static_cast<std::uint64_t>(y));
      });
      const PackOrCover poc = pack_or_cover(h, s, opts.phi, opts.hitting);
      if (poc.is_packing()) {
        PackingWitness w;
        for (const MultiCycle& mc : poc.packing) {
          std::vector<int> walk;
          for (std::size_t i = 0; i < mc.vertices.size(); ++i) {
            walk.push_back(zs[mc.vertices[i]]);
            walk.push_back(static_cast<int>(mc.labels[i]));
          }
          w.cycles.push_back(lift_cycle(p, walk));
        }
        out.witness = validated(p, std::move(w), "reduce_binary");
        return out;
      }
      poc.cover->for_each([&](int i) { x.insert(zs[static_cast<std::size_t>(i)]); });
    }
    out.result = explode_all(p, x, &out.trace);
  }
  out.checks.push_back(
      check_at_most("binary.|X| <= 2phi(s)", static_cast<long long>(out.trace.exploded.size()), 2LL * opts.phi(s)));
  out.checks.push_back(check_at_most("binary.binary vertices <= 2|Z|",
                                     static_cast<long long>(binary_vertices(out.result).size()), 2 * zsize));
  return out;
}

BoundaryReport boundary_reduction(const Plantation& input, const ReduceOptions& opts) {
  if (!is_dyadic(input)) throw InputError("boundary_reduction needs a dyadic plantation");
  const Plantation p = input.rebased();
  const Graph& g = p.g;
  const int s = p.s;
  const long long fs = factorial(s);
  const long long phi = opts.phi(s);
  const long long zsize = static_cast<long long>(p.z.size());
  BoundaryReport rep;
  rep.x = g.empty_set();
  rep.y = g.empty_set();
  rep.n0 = rep.n1 = rep.n2 = g.empty_set();
  const auto fail = [&](const char* stage, const PackingWitness& w) {
    rep.witness = lift_witness(input, w);
    rep.witness_stage = stage;
    return rep;
  };

  Reduction r1 = reduce_binary(p, opts);
  if (r1.witness) return fail("binary", *r1.witness);
  rep.stages.push_back({"binary", r1.trace, r1.checks});

  // Without binary vertices a dyadic plantation is monic. The dropped vertices
  // number at most 2|Z| and send two edges each into Z, at most 4|Z| in all.
  ReductionTrace t_mono;
  const Plantation monic = delete_vertices(r1.result, binary_vertices(r1.result), &t_mono);
  rep.stages.push_back({"drop-binary", t_mono, {}});

  Reduction r2 = make_selfless(monic, opts);
  if (r2.witness) return fail("selfless", *r2.witness);
  rep.stages.push_back({"selfless", r2.trace, r2.checks});

  Reduction r3 = reduce_thickness(r2.result, opts);
  if (r3.witness) return fail("thin", *r3.witness);
  rep.stages.push_back({"thin", r3.trace, r3.checks});

  // Components of G3 - Z meeting N at most once are set aside.
  const Plantation& g3 = r3.result;
  const VertexSet n3 = g3.frontier();
  VertexSet y3 = g3.g.empty_set();
  for (const std::vector<int>& comp : components(g3.g, g3.forest_vertices())) {
    int hits = 0;
    for (int v : comp) hits += n3.contains(v) ? 1 : 0;
    if (hits <= 1) {
      for (int v : comp) y3.insert(v);
    }
  }
  ReductionTrace t_y3;
  const Plantation q = delete_vertices(g3, y3, &t_y3);
  Stage nstage{"nbound", t_y3, {}};
  const std::vector<Transition> normal = normal_transition_set(q);
  const long long nq = static_cast<long long>(q.frontier().size());
  const long long zq = static_cast<long long>(q.z.size());
  nstage.checks.push_back(check_at_most("normal.|N| <= 4|S|", nq, 4 * static_cast<long long>(normal.size())));
  const EpOutcome ep = apply_ep(q, normal, opts.phi, opts.hitting);
  if (ep.witness) return fail("nbound", *ep.witness);
  nstage.checks.push_back(check_at_most("ep.|X| <= phi(s)", static_cast<long long>(ep.x.size()), phi));
  nstage.checks.push_back(check_at_most("ep.uncovered <= |Z|", static_cast<long long>(ep.uncovered.size()), zq));
  const long long k = thickness(q);
  nstage.checks.push_back(check_at_most("nbound.|N| <= 4(k*phi+1)|Z|", nq, 4 * (k * phi + 1) * zq));
  rep.stages.push_back(std::move(nstage));

  for (const Stage& st : rep.stages) {
    for (int v : st.trace.exploded) rep.x.insert(v);
  }
  for (int v : r2.trace.deleted) rep.y.insert(v);

  const VertexSet f = p.forest_vertices();
  VertexSet nx = g.empty_set();
  rep.x.for_each([&](int v) { nx |= g.neighborhood(v); });
  nx &= f;
  const VertexSet rest = f - rep.y - nx;
  rest.for_each([&](int v) {
    const int d = p.z_degree(v);
    if (d == 1) rep.n1.insert(v);
    if (d == 2) rep.n2.insert(v);
  });
  for (const std::vector<int>& comp : components(g, rest - rep.n2)) {
    int ones = 0;
    for (int v : comp) ones += rep.n1.contains(v) ? 1 : 0;
    if (ones == 1) {
      for (int v : comp) {
        if (rep.n1.contains(v)) rep.n0.insert(v);
      }
    }
  }
  const VertexSet counted = f - nx - rep.n0;
  const VertexSet zx = p.z - rep.x;
  long long edges = 0;
  counted.for_each([&](int v) { edges += static_cast<long long>(g.neighborhood(v).intersection_size(zx)); });
  rep.boundary_edges = edges;
  const BigCount bound = BigCount(8) * (BigCount(fs) * (2 * fs + s) * phi + 1) * zsize + 4 * s * fs;
  BoundCheck edge_check = check_at_most("boundary.edges <= 8(s!(2s!+s)phi+1)|Z|+4s*s!", edges, bound);
  rep.edge_bound_holds = edge_check.holds;
  rep.checks.push_back(std::move(edge_check));
  rep.checks.push_back(check_at_most("boundary.|X| <= 2phi+7s-4", static_cast<long long>(rep.x.size()), 2 * phi + 7 * s - 4));
  rep.checks.push_back(check_at_most("boundary.|Y| <= 2s*s!", static_cast<long long>(rep.y.size()), 2 * s * fs));
  return rep;
}

}  // namespace anticycle
