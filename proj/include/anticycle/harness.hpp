#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "anticycle/common.hpp"
#include "anticycle/covering.hpp"
#include "anticycle/graph.hpp"
#include "anticycle/plantation.hpp"
#include "anticycle/recognizer.hpp"
#include "anticycle/reductions.hpp"

namespace anticycle {

/// Seeded draws with a fixed mapping from the engine's output, so results do
/// not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }
  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Independent stream for item `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

Graph gnp(int n, double p, Rng& rng);
/// gnp, then the lowest edge of the lowest 4-cycle goes until none is left.
Graph c4free(int n, double p, Rng& rng);
/// Random recursive forest on n vertices (each vertex after the first joins
/// an earlier one with probability `attach`) plus k extra edges.
Graph forest_plus(int n, int k, Rng& rng, double attach = 1.0);
/// s disjoint anticomplete cycles of length `len`; the remaining vertices up
/// to n form random trees hanging off them.
Graph packed(int s, int len, int n, Rng& rng);

struct GeneratorSpec {
  std::string id = "gnp";
  int n = 10;
  double p = 0.3;
  int k = 3;
  int s = 2;
  int len = 3;
};

/// Throws InputError on an unknown generator id or bad parameters.
Graph generate(const GeneratorSpec& spec, Rng& rng);

struct PipelineReport {
  std::optional<PackingWitness> witness;
  std::string witness_stage;
  bool count_zero = false;
  std::optional<BoundaryReport> boundary;
  std::optional<FinalCountCheck> finalcount;
  std::vector<BoundCheck> checks;

  bool all_hold() const;
};

struct PipelineOptions {
  ReduceOptions reduce;
  /// The covering count runs only when |delta(Z)| is at most this.
  std::size_t max_delta = 16;
};

/// make_dyadic, then boundary_reduction on the dyadic plantation, then the
/// covering-count bound. Witnesses are in root ids and validated.
PipelineReport run_pipeline(const Plantation& p, const PipelineOptions& opts = {});

/// Edges between Z and G - Z.
std::size_t delta_size(const Plantation& p);

struct ExperimentSpec {
  GeneratorSpec generator;
  std::vector<int> sizes{10};
  int trials = 1;
  std::uint64_t seed = 0;
  int s = 2;
  std::size_t max_cycles = 100'000;
  std::uint64_t max_paths = 50'000'000;
  std::size_t max_delta = 16;
  int threads = 1;
  bool record_time = false;
};

/// Throws InputError on a missing seed or non-positive caps.
ExperimentSpec parse_experiment_spec(std::istream& json);

struct RunRecord {
  std::string instance_id;
  int n = 0;
  std::size_t m = 0;
  int s = 0;
  Verdict verdict = Verdict::Free;
  std::string cap_hit;
  std::optional<BigCount> induced_paths;
  std::optional<int> min_hitting_set;
  int checks_passed = 0;
  int checks_total = 0;
  double wall_time = 0.0;
};

/// One record for one graph; witnesses are re-validated before returning.
RunRecord run_instance(const std::string& id, const Graph& g, const ExperimentSpec& spec);

std::string csv_header();
std::string csv_row(const RunRecord& r);

/// Rows in instance order, independent of the worker count.
std::vector<RunRecord> run_experiment(const ExperimentSpec& spec);
void write_csv(std::ostream& out, const std::vector<RunRecord>& rows);

struct Fit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;
  std::size_t rows = 0;
};

/// Least squares of log y on log x.
Fit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);
/// Reads two named columns of a run CSV; rows with an empty field are skipped.
Fit fit_exponent(std::istream& csv, const std::string& x_col, const std::string& y_col);

}  // namespace anticycle
