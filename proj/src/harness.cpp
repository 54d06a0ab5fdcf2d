#include "anticycle/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <istream>
#include <ostream>
#include <sstream>
#include <thread>

#include "anticycle/enumeration.hpp"
#include "anticycle/hitting.hpp"
#include "json.hpp"

namespace anticycle {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below needs a positive bound");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % n;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_order(int n) {
  if (n < 0 || n > kDefaultVertexCap) throw InputError("vertex count out of range: " + std::to_string(n));
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) { return splitmix(seed ^ splitmix(index)); }

Graph gnp(int n, double p, Rng& rng) {
  check_order(n);
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.chance(p)) b.add_edge(u, v);
    }
  }
  return b.build();
}

Graph c4free(int n, double p, Rng& rng) {
  const Graph start = gnp(n, p, rng);
  GraphBuilder b(n);
  for (const Edge& e : start.edges()) b.add_edge(e.u, e.v);
  while (true) {
    const Graph g = b.build();
    const std::vector<std::array<int, 4>> quads = four_cycle_vertex_sets(g);
    if (quads.empty()) return g;
    const auto [a, x, y, d] = quads.front();
    const std::array<std::array<int, 4>, 3> orders{{{a, x, y, d}, {a, x, d, y}, {a, y, x, d}}};
    for (const auto& c : orders) {
      if (!is_cycle(g, c)) continue;
      Edge low{std::min(c[0], c[1]), std::max(c[0], c[1])};
      for (int i = 1; i < 4; ++i) {
        const Edge e{std::min(c[i], c[(i + 1) % 4]), std::max(c[i], c[(i + 1) % 4])};
        low = std::min(low, e);
      }
      b.remove_edge(low.u, low.v);
      break;
    }
  }
}

Graph forest_plus(int n, int k, Rng& rng, double attach) {
  check_order(n);
  if (k < 0) throw InputError("extra edge count must be non-negative");
  GraphBuilder b(n);
  for (int v = 1; v < n; ++v) {
    if (rng.chance(attach)) b.add_edge(static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v);
  }
  for (int i = 0; i < k; ++i) {
    std::vector<Edge> missing;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!b.has_edge(u, v)) missing.push_back({u, v});
      }
    }
    if (missing.empty()) break;
    const Edge e = missing[rng.below(missing.size())];
    b.add_edge(e.u, e.v);
  }
  return b.build();
}

Graph packed(int s, int len, int n, Rng& rng) {
  if (s < 1 || len < 3) throw InputError("packed needs s >= 1 and cycle length >= 3");
  const int base = s * len;
  n = std::max(n, base);
  check_order(n);
  GraphBuilder b(n);
  for (int c = 0; c < s; ++c) {
    for (int i = 0; i < len; ++i) b.add_edge(c * len + i, c * len + (i + 1) % len);
  }
  for (int v = base; v < n; ++v) b.add_edge(static_cast<int>(rng.below(static_cast<std::uint64_t>(v))), v);
  return b.build();
}

Graph generate(const GeneratorSpec& spec, Rng& rng) {
  if (spec.id == "gnp") return gnp(spec.n, spec.p, rng);
  if (spec.id == "c4free") return c4free(spec.n, spec.p, rng);
  if (spec.id == "forest-plus") return forest_plus(spec.n, spec.k, rng);
  if (spec.id == "packed") return packed(spec.s, spec.len, spec.n, rng);
  throw InputError("unknown generator: " + spec.id);
}

bool PipelineReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.holds; });
}

std::size_t delta_size(const Plantation& p) {
  std::size_t d = 0;
  p.z.for_each([&](int v) { d += (p.g.neighborhood(v) - p.z).size(); });
  return d;
}

PipelineReport run_pipeline(const Plantation& p, const PipelineOptions& opts) {
  PipelineReport rep;
  const Reduction dy = make_dyadic(p);
  rep.checks = dy.checks;
  rep.count_zero = dy.count_zero;
  if (!dy.count_zero) {
    BoundaryReport b = boundary_reduction(dy.result, opts.reduce);
    for (const Stage& st : b.stages) rep.checks.insert(rep.checks.end(), st.checks.begin(), st.checks.end());
    rep.checks.insert(rep.checks.end(), b.checks.begin(), b.checks.end());
    if (b.witness) {
      if (std::string why = witness_problem(*p.root, *b.witness, p.s); !why.empty()) {
        throw std::logic_error("pipeline witness from stage " + b.witness_stage + " is invalid: " + why);
      }
      rep.witness = b.witness;
      rep.witness_stage = b.witness_stage;
    }
    rep.boundary = std::move(b);
  }
  if (!rep.witness && delta_size(p) <= opts.max_delta) {
    FinalCountCheck fc = verify_finalcount_bound(p, opts.reduce.phi);
    rep.checks.push_back({"finalcount.n <= |G|^d1 2^(d2|Z|+d3)", fc.n, fc.bound, fc.holds});
    rep.finalcount = std::move(fc);
  }
  return rep;
}

ExperimentSpec parse_experiment_spec(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("experiment spec is not valid JSON: ") + e.what());
  }
  ExperimentSpec spec;
  try {
    if (!j.contains("seed")) throw InputError("experiment spec needs a seed");
    spec.seed = j.at("seed").get<std::uint64_t>();
    spec.generator.id = j.value("generator", spec.generator.id);
    spec.generator.p = j.value("p", spec.generator.p);
    spec.generator.k = j.value("k", spec.generator.k);
    spec.generator.s = j.value("packed_s", spec.generator.s);
    spec.generator.len = j.value("len", spec.generator.len);
    if (j.contains("n")) {
      const auto& n = j.at("n");
      spec.sizes = n.is_array() ? n.get<std::vector<int>>() : std::vector<int>{n.get<int>()};
    }
    spec.trials = j.value("trials", spec.trials);
    spec.s = j.value("s", spec.s);
    spec.threads = j.value("threads", spec.threads);
    spec.record_time = j.value("record_time", spec.record_time);
    if (j.contains("caps")) {
      const auto& c = j.at("caps");
      spec.max_cycles = c.value("max_cycles", spec.max_cycles);
      spec.max_paths = c.value("max_paths", spec.max_paths);
      spec.max_delta = c.value("max_delta", spec.max_delta);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad experiment spec field: ") + e.what());
  }
  if (spec.max_cycles == 0 || spec.max_paths == 0 || spec.max_delta == 0) throw InputError("caps must be positive");
  if (spec.trials < 1 || spec.s < 1 || spec.sizes.empty()) throw InputError("trials, s and n must be positive");
  return spec;
}

RunRecord run_instance(const std::string& id, const Graph& g, const ExperimentSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  RunRecord r;
  r.instance_id = id;
  r.n = g.order();
  r.m = g.size();
  r.s = spec.s;
  const auto inconclusive = [&](const CapExceeded& e) {
    if (r.verdict == Verdict::Free) {
      r.verdict = Verdict::Inconclusive;
      r.cap_hit = e.cap();
    }
  };

  RecognizerOptions ro;
  ro.max_cycles = spec.max_cycles;
  const Recognition rec = is_so_free(g, spec.s, ro);
  r.verdict = rec.verdict;
  r.cap_hit = rec.cap_hit;
  if (rec.witness) {
    if (std::string why = witness_problem(g, *rec.witness, spec.s); !why.empty()) {
      throw std::logic_error("instance " + id + ": recognizer witness is invalid: " + why);
    }
  }

  std::optional<VertexSet> fvs;
  try {
    fvs = minimum_feedback_vertex_set(as_multigraph(g));
    r.min_hitting_set = static_cast<int>(fvs->size());
  } catch (const CapExceeded& e) {
    inconclusive(e);
  }
  try {
    r.induced_paths = count_induced_paths(g, true, 0, spec.max_paths);
  } catch (const CapExceeded& e) {
    inconclusive(e);
  }

  if (r.verdict == Verdict::Free && fvs) {
    try {
      PipelineOptions po;
      po.max_delta = spec.max_delta;
      const PipelineReport pr = run_pipeline(make_plantation(g, *fvs, spec.s), po);
      r.checks_total = static_cast<int>(pr.checks.size()) + 1;
      r.checks_passed = static_cast<int>(std::count_if(pr.checks.begin(), pr.checks.end(),
                                                        [](const BoundCheck& c) { return c.holds; }));
      if (!pr.witness) ++r.checks_passed;
    } catch (const CapExceeded& e) {
      inconclusive(e);
    } catch (const PhiTableError&) {
      r.checks_total += 1;
    }
  }
  if (spec.record_time) r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string csv_header() {
  return "# anticycle-run v1\ninstance_id,n,m,s,verdict,induced_paths,min_hitting_set,bounds_passed,wall_time\n";
}

std::string csv_row(const RunRecord& r) {
  std::ostringstream out;
  out << r.instance_id << ',' << r.n << ',' << r.m << ',' << r.s << ',' << to_string(r.verdict);
  if (r.verdict == Verdict::Inconclusive) out << ':' << r.cap_hit;
  out << ',';
  if (r.induced_paths) out << *r.induced_paths;
  out << ',';
  if (r.min_hitting_set) out << *r.min_hitting_set;
  out << ',' << r.checks_passed << '/' << r.checks_total << ',';
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", r.wall_time);
  out << buf << '\n';
  return out.str();
}

std::vector<RunRecord> run_experiment(const ExperimentSpec& spec) {
  struct Job {
    std::string id;
    int n;
    std::uint64_t index;
  };
  std::vector<Job> jobs;
  for (int n : spec.sizes) {
    for (int t = 0; t < spec.trials; ++t) {
      jobs.push_back({spec.generator.id + "-n" + std::to_string(n) + "-" + std::to_string(t), n, jobs.size()});
    }
  }
  std::vector<RunRecord> rows(jobs.size());
  std::vector<std::exception_ptr> errors(jobs.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        GeneratorSpec gs = spec.generator;
        gs.n = jobs[i].n;
        Rng rng(derive_seed(spec.seed, jobs[i].index));
        rows[i] = run_instance(jobs[i].id, generate(gs, rng), spec);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(spec.threads, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<RunRecord>& rows) {
  out << csv_header();
  for (const RunRecord& r : rows) out << csv_row(r);
}

Fit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw InputError("fit needs paired columns");
  if (x.size() < 3) throw InputError("fit needs at least three rows");
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw InputError("fit needs positive values");
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  const double k = static_cast<double>(lx.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    mx += lx[i] / k;
    my += ly[i] / k;
  }
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx <= 1e-12) throw InputError("fit is degenerate: all x values are equal");
  Fit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.rows = lx.size();
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double e = ly[i] - (f.intercept + f.slope * lx[i]);
    f.residual += e * e;
  }
  return f;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

Fit fit_exponent(std::istream& csv, const std::string& x_col, const std::string& y_col) {
  std::string line;
  std::vector<std::string> header;
  while (std::getline(csv, line)) {
    if (line.empty() || line.front() == '#') continue;
    header = split_csv(line);
    break;
  }
  const auto column = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw InputError("no column named " + name);
    return static_cast<std::size_t>(it - header.begin());
  };
  const std::size_t xi = column(x_col);
  const std::size_t yi = column(y_col);
  std::vector<double> x;
  std::vector<double> y;
  while (std::getline(csv, line)) {
    if (line.empty() || line.front() == '#') continue;
    const std::vector<std::string> f = split_csv(line);
    if (f.size() <= std::max(xi, yi) || f[xi].empty() || f[yi].empty()) continue;
    try {
      x.push_back(std::stod(f[xi]));
      y.push_back(std::stod(f[yi]));
    } catch (const std::exception&) {
      throw InputError("non-numeric value in row: " + line);
    }
  }
  return fit_loglog(x, y);
}

}  // namespace anticycle
