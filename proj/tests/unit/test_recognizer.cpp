#include "doctest.h"
#include "oracles.hpp"

#include "anticycle/recognizer.hpp"

using namespace anticycle;

namespace {

Graph disjoint_cycles(int count, int len, bool bridge = false) {
  GraphBuilder b(count * len);
  for (int c = 0; c < count; ++c) {
    for (int i = 0; i < len; ++i) b.add_edge(c * len + i, c * len + (i + 1) % len);
  }
  if (bridge) b.add_edge(0, len);
  return b.build();
}

Graph petersen() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, i + 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return b.build();
}

}  // namespace

TEST_CASE("two triangles") {
  const Graph g = disjoint_cycles(2, 3);
  const Recognition r = is_so_free(g, 2);
  CHECK(r.verdict == Verdict::Witness);
  REQUIRE(r.witness);
  CHECK(is_valid_witness(g, *r.witness, 2));
  CHECK(r.witness->cycles[0] == Cycle{{0, 1, 2}});
  CHECK(r.witness->cycles[1] == Cycle{{3, 4, 5}});
}

TEST_CASE("forests are exactly the 1O-free graphs") {
  CHECK(is_so_free(Graph(4, {{0, 1}, {1, 2}, {1, 3}}), 1).verdict == Verdict::Free);
  CHECK(is_so_free(disjoint_cycles(1, 5), 1).verdict == Verdict::Witness);
  CHECK_THROWS_AS(is_so_free(Graph(1), 0), InputError);
}

TEST_CASE("triangles joined by an edge are 2O-free") {
  const Graph g = disjoint_cycles(2, 3, true);
  CHECK(is_so_free(g, 2).verdict == Verdict::Free);
  CHECK(is_2o_free_via_paths(g).verdict == Verdict::Free);
  CHECK_FALSE(oracle::has_anticomplete_cycles(g, 2));
}

TEST_CASE("path-based recognizer examples") {
  const Graph c4s = disjoint_cycles(2, 4);
  const Recognition r = is_2o_free_via_paths(c4s);
  CHECK(r.verdict == Verdict::Witness);
  REQUIRE(r.witness);
  CHECK(is_valid_witness(c4s, *r.witness, 2));
  CHECK(is_2o_free_via_paths(disjoint_cycles(1, 7)).verdict == Verdict::Free);
  const Graph p = petersen();
  const bool expected = !oracle::has_anticomplete_cycles(p, 2);
  CHECK((is_2o_free_via_paths(p).verdict == Verdict::Free) == expected);
  CHECK((is_so_free(p, 2).verdict == Verdict::Free) == expected);
}

TEST_CASE("maximum anticomplete packing") {
  const PackingResult three = max_anticomplete_cycle_packing(disjoint_cycles(3, 3), 5);
  CHECK(three.size == 3);
  REQUIRE(three.witness);
  CHECK(is_valid_witness(disjoint_cycles(3, 3), *three.witness, 3));
  CHECK(max_anticomplete_cycle_packing(Graph(3, {{0, 1}, {1, 2}}), 5).size == 0);
  const Graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
  CHECK(max_anticomplete_cycle_packing(bowtie, 5).size == 1);
}

TEST_CASE("cycle cap yields inconclusive") {
  RecognizerOptions opts;
  opts.max_cycles = 2;
  const Recognition r = is_so_free(disjoint_cycles(4, 3, true), 5, opts);
  CHECK(r.verdict == Verdict::Inconclusive);
  CHECK(r.cap_hit == "max-cycles");
  CHECK_THROWS_AS(max_anticomplete_cycle_packing(disjoint_cycles(4, 3), 5, opts), CapExceeded);
}

TEST_CASE("witness validation catches bad packings") {
  const Graph g = disjoint_cycles(2, 3, true);
  const PackingWitness touching{{Cycle{{0, 1, 2}}, Cycle{{3, 4, 5}}}};
  CHECK_FALSE(witness_problem(g, touching, 2).empty());
  CHECK_FALSE(witness_problem(g, PackingWitness{{Cycle{{0, 1, 2}}}}, 2).empty());
  CHECK_FALSE(witness_problem(g, PackingWitness{{Cycle{{0, 1, 3}}}}, 1).empty());
}

TEST_CASE("shortcutting chords") {
  GraphBuilder b(6);
  for (int i = 0; i < 6; ++i) b.add_edge(i, (i + 1) % 6);
  b.add_edge(0, 3);
  const Graph g = b.build();
  const Cycle c = shortcut_to_induced(g, Cycle{{0, 1, 2, 3, 4, 5}});
  CHECK(is_induced_cycle(g, c.vertices));
  CHECK(c.length() == 4);
}

TEST_CASE("agreement with the oracle and heredity on random graphs") {
  Rng rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(11));
    const Graph g = gnp(n, 0.15 + 0.3 * rng.unit(), rng);
    for (int s = 1; s <= 3; ++s) {
      const Recognition r = is_so_free(g, s);
      CHECK((r.verdict == Verdict::Free) == !oracle::has_anticomplete_cycles(g, s));
      if (r.witness) CHECK(is_valid_witness(g, *r.witness, s));
      if (r.verdict == Verdict::Free && n > 1) {
        const int v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        const Graph h = induced_subgraph(g, g.all_vertices() - VertexSet(n, {v})).graph;
        CHECK(is_so_free(h, s).verdict == Verdict::Free);
      }
    }
    CHECK(is_2o_free_via_paths(g).verdict == is_so_free(g, 2).verdict);
  }
}
