#include "doctest.h"
#include "oracles.hpp"

#include <cmath>
#include <sstream>

#include "anticycle/harness.hpp"
#include "anticycle/hitting.hpp"

using namespace anticycle;

namespace {

std::string run_csv(const ExperimentSpec& spec) {
  std::ostringstream out;
  write_csv(out, run_experiment(spec));
  return out.str();
}

ExperimentSpec parse(const std::string& json) {
  std::istringstream in(json);
  return parse_experiment_spec(in);
}

}  // namespace

TEST_CASE("rng is deterministic and in range") {
  Rng a(5), b(5);
  for (int i = 0; i < 100; ++i) CHECK(a.bits() == b.bits());
  Rng c(6);
  for (int i = 0; i < 1000; ++i) {
    CHECK(c.below(7) < 7);
    const double u = c.unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
  CHECK(derive_seed(1, 0) != derive_seed(1, 1));
  CHECK(derive_seed(1, 0) == derive_seed(1, 0));
}

TEST_CASE("generator examples") {
  Rng rng(11);
  const Graph two = packed(2, 3, 6, rng);
  CHECK(two.order() == 6);
  CHECK(two.size() == 6);
  CHECK(is_so_free(two, 2).verdict == Verdict::Witness);

  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = c4free(12, 0.5, rng);
    CHECK(four_cycle_vertex_sets(g).empty());
    const Graph f = forest_plus(15, 0, rng);
    CHECK(is_forest(f));
    CHECK(minimum_feedback_vertex_set(as_multigraph(f)).empty());
    const Graph k3 = forest_plus(15, 3, rng);
    CHECK(k3.size() == 17);
    const Graph pk = packed(3, 4, 20, rng);
    CHECK(is_so_free(pk, 3).verdict == Verdict::Witness);
  }

  GeneratorSpec bad;
  bad.id = "nope";
  CHECK_THROWS_AS(generate(bad, rng), InputError);
}

TEST_CASE("experiment spec parsing") {
  const ExperimentSpec s = parse(R"({"seed": 3, "generator": "packed", "packed_s": 2, "len": 4, "n": [8, 12],
                                    "trials": 2, "s": 2, "caps": {"max_cycles": 100}})");
  CHECK(s.seed == 3);
  CHECK(s.generator.id == "packed");
  CHECK(s.generator.s == 2);
  CHECK(s.sizes == std::vector<int>{8, 12});
  CHECK(s.max_cycles == 100);
  CHECK_THROWS_AS(parse(R"({"n": 5})"), InputError);
  CHECK_THROWS_AS(parse(R"({"seed": 1, "caps": {"max_cycles": 0}})"), InputError);
  CHECK_THROWS_AS(parse("not json"), InputError);
}

TEST_CASE("packed experiments are all witnesses") {
  const ExperimentSpec spec = parse(R"({"seed": 4, "generator": "packed", "packed_s": 2, "len": 3, "n": [6, 10], "trials": 3, "s": 2})");
  for (const RunRecord& r : run_experiment(spec)) {
    CHECK(r.verdict == Verdict::Witness);
    CHECK(r.checks_passed == r.checks_total);
  }
}

TEST_CASE("forest experiments") {
  const ExperimentSpec spec = parse(R"({"seed": 5, "generator": "forest-plus", "k": 0, "n": [5, 9, 14], "trials": 4, "s": 2})");
  for (const RunRecord& r : run_experiment(spec)) {
    CHECK(r.verdict == Verdict::Free);
    REQUIRE(r.min_hitting_set);
    CHECK(*r.min_hitting_set == 0);
    REQUIRE(r.induced_paths);
    CHECK(*r.induced_paths <= BigCount(r.n) * r.n);
    CHECK(r.checks_passed == r.checks_total);
  }
}

TEST_CASE("caps are reported as inconclusive") {
  const ExperimentSpec spec =
      parse(R"({"seed": 6, "generator": "gnp", "p": 0.5, "n": 12, "trials": 2, "s": 3, "caps": {"max_cycles": 1}})");
  for (const RunRecord& r : run_experiment(spec)) {
    if (r.verdict == Verdict::Inconclusive) CHECK_FALSE(r.cap_hit.empty());
    const std::string row = csv_row(r);
    if (r.verdict == Verdict::Inconclusive) CHECK(row.find("INCONCLUSIVE:") != std::string::npos);
  }
}

TEST_CASE("csv output is deterministic across worker counts") {
  ExperimentSpec spec = parse(R"({"seed": 7, "generator": "gnp", "p": 0.3, "n": [6, 9], "trials": 3, "s": 2})");
  const std::string one = run_csv(spec);
  spec.threads = 3;
  CHECK(run_csv(spec) == one);
  CHECK(one.rfind("# anticycle-run v1\n", 0) == 0);
  CHECK(one.find(csv_header()) != std::string::npos);
}

TEST_CASE("log-log fits") {
  const Fit sq = fit_loglog({2, 4, 8}, {4, 16, 64});
  CHECK(std::abs(sq.slope - 2.0) < 1e-9);
  CHECK(sq.rows == 3);
  const Fit flat = fit_loglog({2, 4, 8}, {5, 5, 5});
  CHECK(std::abs(flat.slope) < 1e-12);
  CHECK_THROWS_AS(fit_loglog({2, 4}, {1, 2}), InputError);
  CHECK_THROWS_AS(fit_loglog({2, 4, 8}, {1, 0, 2}), InputError);
  CHECK_THROWS_AS(fit_loglog({3, 3, 3}, {1, 2, 3}), InputError);

  std::istringstream csv("# anticycle-run v1\nn,y\n2,4\n4,16\n8,64\n16,\n");
  const Fit f = fit_exponent(csv, "n", "y");
  CHECK(f.rows == 3);
  CHECK(std::abs(f.slope - 2.0) < 1e-9);
}

TEST_CASE("pipeline on a free plantation") {
  const Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const PipelineReport r = run_pipeline(make_plantation(c6, VertexSet(6, {0, 3}), 2));
  CHECK_FALSE(r.witness);
  CHECK(r.all_hold());
  REQUIRE(r.finalcount);
  CHECK(r.finalcount->n == 2);
  CHECK(delta_size(make_plantation(c6, VertexSet(6, {0, 3}), 2)) == 4);
}
