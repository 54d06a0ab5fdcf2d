#include "doctest.h"
#include "oracles.hpp"

#include <numeric>

#include "anticycle/forest.hpp"

using namespace anticycle;

namespace {

VertexSet set_of(int n, std::initializer_list<int> vs) { return VertexSet(n, vs); }

bool pairwise_anticomplete(const Graph& host, const std::vector<Path>& ps) {
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (!anticomplete(host, vertex_set_of(host, ps[i].vertices), vertex_set_of(host, ps[j].vertices))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("conflict graphs") {
  const Graph p7(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  const SubtreeFamily spaced{p7, {set_of(7, {0}), set_of(7, {2, 3}), set_of(7, {5, 6})}};
  CHECK(intersection_conflict_graph(spaced, SubtreeMode::Anticomplete).size() == 0);
  const SubtreeFamily sharing{p7, {set_of(7, {0, 1}), set_of(7, {1, 2})}};
  CHECK(intersection_conflict_graph(sharing, SubtreeMode::Disjoint).size() == 1);
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  const SubtreeFamily edges{star, {set_of(4, {0, 1}), set_of(4, {0, 2}), set_of(4, {0, 3})}};
  CHECK(intersection_conflict_graph(edges, SubtreeMode::Disjoint).size() == 3);
  const SubtreeFamily bad{Graph(3, {{0, 1}, {1, 2}, {2, 0}}), {set_of(3, {0})}};
  CHECK_THROWS_AS(intersection_conflict_graph(bad, SubtreeMode::Disjoint), InputError);
  const SubtreeFamily split{p7, {set_of(7, {0, 2})}};
  CHECK_THROWS_AS(validate_family(split), InputError);
}

TEST_CASE("ring check examples") {
  const Graph p7(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  CHECK(check_ring(SubtreeFamily{p7, {set_of(7, {0}), set_of(7, {3}), set_of(7, {6})}}).ok);
  const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(check_ring(SubtreeFamily{star, {set_of(4, {1}), set_of(4, {2}), set_of(4, {3})}}).ok);
}

TEST_CASE("balanced stable sets") {
  const Graph edge(2, {{0, 1}});
  CHECK(balanced_stable_set(edge, set_of(2, {0}), set_of(2, {1}), 0) == set_of(2, {1}));
  CHECK(balanced_stable_set(edge, set_of(2, {0}), set_of(2, {1}), 1) == set_of(2, {0}));
  const Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  const VertexSet a = set_of(4, {0, 2});
  const VertexSet b = set_of(4, {1, 3});
  CHECK(balanced_stable_set(p4, a, b, 2) == a);
  CHECK(balanced_stable_set(p4, a, b, 0) == b);
  const VertexSet x = balanced_stable_set(p4, a, b, 1);
  CHECK(is_stable(p4, x));
  CHECK(x.size() == 2);
  CHECK(x.intersection_size(a) == 1);
  CHECK_THROWS_AS(balanced_stable_set(p4, set_of(4, {0, 1}), set_of(4, {2, 3}), 1), InputError);
  CHECK_THROWS_AS(balanced_stable_set(p4, a, b, 3), InputError);
  CHECK_THROWS_AS(balanced_stable_set(p4, set_of(4, {0}), set_of(4, {1, 2, 3}), 0), InputError);
}

TEST_CASE("anticomplete path selection") {
  const Graph p11(11, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 10}});
  std::vector<Path> six;
  for (int v = 0; v <= 10; v += 2) six.push_back(Path{{v}});
  const auto one = select_anticomplete_paths(p11, {six}, 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0] == std::vector<Path>{Path{{0}}, Path{{2}}, Path{{4}}});

  // Cross conflicts form a perfect matching: 0~1 and 4~5.
  const Graph h(6, {{0, 1}, {4, 5}});
  const auto two = select_anticomplete_paths(h, {{Path{{0}}, Path{{4}}}, {Path{{1}}, Path{{5}}}}, 1);
  REQUIRE(two.size() == 2);
  CHECK(pairwise_anticomplete(h, {two[0][0], two[1][0]}));

  const auto apart = select_anticomplete_paths(p11, {{Path{{0}}, Path{{2}}}, {Path{{6}}, Path{{8}}}}, 1);
  CHECK(apart[0][0] == Path{{0}});
  CHECK(apart[1][0] == Path{{6}});
  CHECK_THROWS_AS(select_anticomplete_paths(p11, {{Path{{0}}}, {Path{{6}}}}, 1), InputError);
  CHECK_THROWS_AS(select_anticomplete_paths(p11, {{Path{{0}}, Path{{1}}}}, 2), InputError);
}

TEST_CASE("anticomplete path selection on random forests") {
  Rng rng(8);
  int tried = 0;
  for (int trial = 0; trial < 400 && tried < 150; ++trial) {
    const int n = 10 + static_cast<int>(rng.below(20));
    const Graph host = forest_plus(n, 0, rng, 0.9);
    const int s = 1 + static_cast<int>(rng.below(3));
    const int k = 1 + static_cast<int>(rng.below(2));
    const int need = static_cast<int>(factorial(s)) * k;
    std::vector<std::vector<Path>> fams;
    for (int i = 0; i < s; ++i) {
      std::vector<Path> fam;
      VertexSet blocked(n);
      std::vector<int> order(static_cast<std::size_t>(n));
      std::iota(order.begin(), order.end(), 0);
      for (int j = n - 1; j > 0; --j) std::swap(order[j], order[rng.below(static_cast<std::uint64_t>(j) + 1)]);
      for (int v : order) {
        if (static_cast<int>(fam.size()) == need) break;
        if (blocked.contains(v)) continue;
        fam.push_back(Path{{v}});
        blocked |= closed_neighborhood(host, VertexSet(n, {v}));
      }
      fams.push_back(std::move(fam));
    }
    if (std::any_of(fams.begin(), fams.end(), [&](const auto& f) { return static_cast<int>(f.size()) != need; })) continue;
    ++tried;
    const auto chosen = select_anticomplete_paths(host, fams, k);
    std::vector<Path> all;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      CHECK(static_cast<int>(chosen[i].size()) == k);
      for (const Path& p : chosen[i]) {
        CHECK(std::find(fams[i].begin(), fams[i].end(), p) != fams[i].end());
        all.push_back(p);
      }
    }
    CHECK(pairwise_anticomplete(host, all));
  }
  CHECK(tried > 50);
}

TEST_CASE("subtree hitting examples") {
  const Graph p7(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  const SubtreeFamily three{p7, {set_of(7, {0, 1}), set_of(7, {3}), set_of(7, {5, 6})}};
  const SubtreeHitting one = subtree_hitting_set(three, 1, SubtreeMode::Disjoint);
  CHECK(one.is_packing());
  CHECK(one.packing.size() == 1);
  const SubtreeHitting all = subtree_hitting_set(three, 3, SubtreeMode::Disjoint);
  REQUIRE(all.is_packing());
  CHECK(all.packing.size() == 3);
  const SubtreeFamily shared{p7, {set_of(7, {2, 3}), set_of(7, {3, 4, 5}), set_of(7, {1, 2, 3})}};
  const SubtreeHitting hit = subtree_hitting_set(shared, 2, SubtreeMode::Disjoint);
  REQUIRE_FALSE(hit.is_packing());
  CHECK(*hit.hit == set_of(7, {3}));
  CHECK_THROWS_AS(subtree_hitting_set(three, 0, SubtreeMode::Disjoint), InputError);
}
