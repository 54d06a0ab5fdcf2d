#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "anticycle/enumeration.hpp"

using namespace anticycle;

namespace {

Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

Graph complete(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  }
  return b.build();
}

std::vector<std::vector<int>> stream_all(const Graph& g, int v) {
  std::vector<std::vector<int>> out;
  InducedPathStream s(g, v);
  while (s.next()) out.emplace_back(s.current().begin(), s.current().end());
  return out;
}

// Every vertex sequence, checked by definition.
std::set<std::vector<int>> brute_ordered_paths(const Graph& g) {
  std::set<std::vector<int>> out;
  std::vector<int> seq;
  std::vector<bool> used(static_cast<std::size_t>(g.order()), false);
  const std::function<void()> rec = [&] {
    if (!seq.empty()) {
      bool induced = true;
      for (std::size_t i = 0; i < seq.size() && induced; ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
          if (g.adjacent(seq[i], seq[j]) != (j == i + 1)) {
            induced = false;
            break;
          }
        }
      }
      if (!induced) return;
      out.insert(seq);
    }
    for (int v = 0; v < g.order(); ++v) {
      if (used[v]) continue;
      used[v] = true;
      seq.push_back(v);
      rec();
      seq.pop_back();
      used[v] = false;
    }
  };
  rec();
  return out;
}

}  // namespace

TEST_CASE("paths from one vertex") {
  CHECK(stream_all(Graph(1), 0).size() == 1);
  CHECK(stream_all(Graph(3, {{0, 1}, {1, 2}}), 0) == std::vector<std::vector<int>>{{0}, {0, 1}, {0, 1, 2}});
  CHECK(stream_all(complete(3), 0) == std::vector<std::vector<int>>{{0}, {0, 1}, {0, 2}});
  CHECK_THROWS_AS(InducedPathStream(Graph(2), 5), InputError);
}

TEST_CASE("path counts") {
  CHECK(count_induced_paths(complete(3), false) == 6);
  CHECK(count_induced_paths(Graph(3, {{0, 1}, {1, 2}}), false) == 6);
  CHECK(count_induced_paths(Graph(0), false) == 0);
}

TEST_CASE("enumeration is complete on small graphs") {
  Rng rng(1);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const Graph g = gnp(n, rng.unit(), rng);
    std::set<std::vector<int>> streamed;
    for (int v = 0; v < n; ++v) {
      for (auto& p : stream_all(g, v)) CHECK(streamed.insert(p).second);
    }
    CHECK(streamed == brute_ordered_paths(g));
  }
}

TEST_CASE("ordered and unordered counts, vertex deletion, forest bound") {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(11));
    const Graph g = gnp(n, rng.unit(), rng);
    const BigCount un = count_induced_paths(g, false);
    CHECK(un == oracle::count_induced_paths(g));
    CHECK(count_induced_paths(g, true) == 2 * un - n);
    const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const Graph smaller = induced_subgraph(g, g.all_vertices() - VertexSet(n, {v})).graph;
    CHECK(count_induced_paths(smaller, false) <= un);

    const Graph f = forest_plus(n, 0, rng, 0.8);
    CHECK(count_induced_paths(f, true) <= BigCount(n) * n);
  }
}

TEST_CASE("count cap and length cap") {
  const Graph p5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(count_induced_paths(p5, false, 2) == 9);
  CHECK_THROWS_AS(count_induced_paths(p5, true, 0, 3), CapExceeded);
}

TEST_CASE("cycles extending a path") {
  const Graph c4 = cycle_graph(4);
  const auto ext = induced_cycles_extending(c4, Path{{0, 1, 2}});
  REQUIRE(ext.size() == 1);
  CHECK(ext[0] == canonical_cycle(Cycle{{0, 1, 2, 3}}));
  CHECK(induced_cycles_extending(complete(3), Path{{0, 1}}).size() == 1);
  const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(induced_cycles_extending(p4, Path{{0, 1, 2}}).empty());
  CHECK_THROWS_AS(induced_cycles_extending(complete(3), Path{{0, 1, 2}}), InputError);
}

TEST_CASE("induced cycle enumeration") {
  CHECK(enumerate_induced_cycles(cycle_graph(5)).size() == 1);
  const auto k4 = enumerate_induced_cycles(complete(4));
  CHECK(k4.size() == 4);
  CHECK(std::all_of(k4.begin(), k4.end(), [](const Cycle& c) { return c.length() == 3; }));
  CHECK(enumerate_induced_cycles(Graph(4, {{0, 1}, {1, 2}, {1, 3}})).empty());
  Rng rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(9));
    const Graph g = gnp(n, rng.unit(), rng);
    std::set<VertexSet, bool (*)(const VertexSet&, const VertexSet&)> got(
        [](const VertexSet& a, const VertexSet& b) { return a.members() < b.members(); });
    for (const Cycle& c : enumerate_induced_cycles(g)) {
      CHECK(c == canonical_cycle(c));
      CHECK(is_induced_cycle(g, c.vertices));
      CHECK(got.insert(vertex_set_of(g, c.vertices)).second);
    }
    CHECK(got.size() == oracle::induced_cycle_sets(g).size());
  }
}

TEST_CASE("exclusion sets") {
  const Graph c4u(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const Cycle c{{0, 1, 2, 3}};
  CHECK(exclusion_set(c4u, c) == VertexSet(5, {4}));
  const Graph pendant(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}});
  CHECK(exclusion_set(pendant, c).empty());
  const Graph two(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  CHECK(exclusion_set(two, c) == VertexSet(8, {4, 5, 6, 7}));
  CHECK_THROWS_AS(exclusion_set(two, Cycle{{0, 1, 2}}), InputError);
}

TEST_CASE("heads") {
  const Graph p3(3, {{0, 1}, {1, 2}});
  CHECK_FALSE(head(p3, Path{{0, 1, 2}}).has_value());
  // cycle on 2..5, path 0-1 anticomplete to it
  const Graph g(6, {{0, 1}, {2, 3}, {3, 4}, {4, 5}, {5, 2}});
  CHECK(head(g, Path{{0, 1}}) == Path{{0, 1}});
  // cycle on 3..6, path 0-1-2 with 2 touching the cycle
  const Graph h(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 3}});
  CHECK(head(h, Path{{0, 1, 2}}) == Path{{0, 1}});
}

TEST_CASE("head is a maximal prefix") {
  Rng rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(6));
    const Graph g = gnp(n, 0.35, rng);
    for (int v = 0; v < n; ++v) {
      InducedPathStream s(g, v);
      while (s.next()) {
        const Path p{std::vector<int>(s.current().begin(), s.current().end())};
        const auto hd = head(g, p);
        if (!hd) continue;
        REQUIRE(hd->length() <= p.length());
        CHECK(std::equal(hd->vertices.begin(), hd->vertices.end(), p.vertices.begin()));
        CHECK(is_induced_path(g, hd->vertices));
        if (hd->length() < p.length()) {
          for (const auto& q : four_cycle_vertex_sets(g)) {
            const VertexSet near = closed_neighborhood(g, VertexSet::from(n, q));
            bool inside = true;
            for (std::size_t i = 0; i <= hd->length(); ++i) inside = inside && !near.contains(p.vertices[i]);
            CHECK_FALSE(inside);
          }
        }
      }
    }
  }
}
