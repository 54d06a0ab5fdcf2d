#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "anticycle/covering.hpp"
#include "anticycle/enumeration.hpp"
#include "anticycle/harness.hpp"
#include "anticycle/hitting.hpp"
#include "anticycle/io.hpp"
#include "anticycle/phi_table.hpp"
#include "anticycle/plantation.hpp"
#include "anticycle/recognizer.hpp"
#include "anticycle/reductions.hpp"

using namespace anticycle;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInput = 2, kWitness = 3, kInconclusive = 4 };

struct Common {
  std::string format = "edgelist";
  bool json = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Graph file format")->check(CLI::IsMember({"edgelist", "graph6"}));
  cmd->add_flag("--json", c.json, "Machine-readable output");
}

Graph load(const std::string& file, const Common& c) { return io::load_graph(file, io::parse_format(c.format)); }

VertexSet load_z(const std::string& file, const Graph& g) {
  VertexSet z(g.order());
  for (int v : io::load_vertex_list(file)) {
    if (v < 0 || v >= g.order()) throw InputError("vertex " + std::to_string(v) + " in " + file + " is out of range");
    z.insert(v);
  }
  return z;
}

std::string join(const std::vector<int>& vs) {
  std::string out;
  for (int v : vs) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

json witness_json(const PackingWitness& w) {
  json cycles = json::array();
  for (const Cycle& c : w.cycles) cycles.push_back(c.vertices);
  return cycles;
}

json checks_json(const std::vector<BoundCheck>& checks) {
  json out = json::array();
  for (const BoundCheck& c : checks) out.push_back({{"name", c.name}, {"lhs", c.lhs.str()}, {"rhs", c.rhs.str()}, {"holds", c.holds}});
  return out;
}

void print_checks(const std::vector<BoundCheck>& checks, const std::string& indent) {
  for (const BoundCheck& c : checks) {
    std::cout << indent << (c.holds ? "PASS " : "FAIL ") << c.name << ": " << c.lhs << " vs " << c.rhs << '\n';
  }
}

int recognize(const std::string& file, int s, bool paths, std::size_t max_cycles, std::uint64_t max_paths, const Common& c) {
  const Graph g = load(file, c);
  RecognizerOptions opts;
  opts.max_cycles = max_cycles;
  opts.max_paths = max_paths;
  if (paths && s != 2) throw InputError("--paths needs --s 2");
  const Recognition r = paths ? is_2o_free_via_paths(g, opts) : is_so_free(g, s, opts);
  if (c.json) {
    json j{{"verdict", to_string(r.verdict)}};
    if (r.witness) j["cycles"] = witness_json(*r.witness);
    if (!r.cap_hit.empty()) j["cap"] = r.cap_hit;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << to_string(r.verdict);
    if (r.verdict == Verdict::Inconclusive) std::cout << ' ' << r.cap_hit;
    std::cout << '\n';
    if (r.witness) {
      for (const Cycle& cy : r.witness->cycles) std::cout << join(cy.vertices) << '\n';
    }
  }
  if (r.verdict == Verdict::Witness) return kWitness;
  return r.verdict == Verdict::Inconclusive ? kInconclusive : kOk;
}

int count_paths(const std::string& file, bool ordered, int max_len, std::uint64_t cap, const Common& c) {
  const Graph g = load(file, c);
  const BigCount n = count_induced_paths(g, ordered, max_len, cap);
  if (c.json) {
    std::cout << json{{"count", n.str()}, {"ordered", ordered}, {"max_len", max_len}}.dump() << '\n';
  } else {
    std::cout << n << '\n';
  }
  return kOk;
}

int count_covering(const std::string& file, const std::string& zfile, int s, bool check_bound, const Common& c) {
  const Graph g = load(file, c);
  const Plantation p = make_plantation(g, load_z(zfile, g), s);
  if (!check_bound) {
    const BigCount n = count_z_covering(p);
    if (c.json) {
      std::cout << json{{"count", n.str()}}.dump() << '\n';
    } else {
      std::cout << n << '\n';
    }
    return kOk;
  }
  const FinalCountCheck f = verify_finalcount_bound(p);
  if (c.json) {
    std::cout << json{{"count", f.n.str()}, {"bound", f.bound.str()}, {"d1", f.d1}, {"d2", f.d2}, {"d3", f.d3}, {"holds", f.holds}}.dump()
              << '\n';
  } else {
    std::cout << f.n << '\n'
              << (f.holds ? "PASS" : "FAIL") << " n <= |G|^" << f.d1 << " * 2^(" << f.d2 << "|Z| + " << f.d3 << ") = " << f.bound << '\n';
  }
  return f.holds ? kOk : kFailed;
}

int reduce(const std::string& file, const std::string& zfile, int s, std::size_t max_delta, const Common& c) {
  const Graph g = load(file, c);
  PipelineOptions opts;
  opts.max_delta = max_delta;
  const PipelineReport r = run_pipeline(make_plantation(g, load_z(zfile, g), s), opts);
  const char* outcome = r.witness ? "WITNESS" : (r.all_hold() ? "PASS" : "FAIL");
  if (c.json) {
    json j{{"result", outcome}, {"count_zero", r.count_zero}, {"checks", checks_json(r.checks)}};
    if (r.witness) {
      j["witness_stage"] = r.witness_stage;
      j["cycles"] = witness_json(*r.witness);
    }
    if (r.boundary) {
      json stages = json::array();
      for (const Stage& st : r.boundary->stages) {
        stages.push_back({{"name", st.name},
                          {"exploded", st.trace.exploded},
                          {"deleted", st.trace.deleted},
                          {"contracted", st.trace.contracted.size()},
                          {"checks", checks_json(st.checks)}});
      }
      j["stages"] = stages;
      j["x"] = r.boundary->x.members();
      j["y"] = r.boundary->y.members();
      j["boundary_edges"] = r.boundary->boundary_edges;
    }
    if (r.finalcount) j["covering_paths"] = r.finalcount->n.str();
    std::cout << j.dump() << '\n';
  } else {
    if (r.count_zero) std::cout << "dyadic: Z contains a triangle, no Z-covering paths\n";
    if (r.boundary) {
      for (const Stage& st : r.boundary->stages) {
        std::cout << st.name << ": exploded " << st.trace.exploded.size() << ", deleted " << st.trace.deleted.size()
                  << ", contracted " << st.trace.contracted.size() << '\n';
        print_checks(st.checks, "  ");
      }
      std::cout << "boundary: |X| = " << r.boundary->x.size() << ", |Y| = " << r.boundary->y.size() << ", edges "
                << r.boundary->boundary_edges << '\n';
    }
    std::cout << "checks:\n";
    print_checks(r.checks, "  ");
    std::cout << outcome;
    if (r.witness) std::cout << " (" << r.witness_stage << ")";
    std::cout << '\n';
    if (r.witness) {
      for (const Cycle& cy : r.witness->cycles) std::cout << join(cy.vertices) << '\n';
    }
  }
  if (r.witness) return kWitness;
  return r.all_hold() ? kOk : kFailed;
}

int hitting_set(const std::string& file, int s, const Common& c) {
  const Multigraph h = io::load_multigraph(file);
  const PackOrCover r = pack_or_cover(h, s);
  if (c.json) {
    json j;
    if (r.is_packing()) {
      json cycles = json::array();
      for (const MultiCycle& m : r.packing) cycles.push_back({{"vertices", m.vertices}, {"labels", m.labels}});
      j = {{"result", "PACKING"}, {"cycles", cycles}};
    } else {
      j = {{"result", "COVER"}, {"vertices", r.cover->members()}};
    }
    std::cout << j.dump() << '\n';
  } else if (r.is_packing()) {
    std::cout << "PACKING\n";
    for (const MultiCycle& m : r.packing) std::cout << join(m.vertices) << '\n';
  } else {
    std::cout << "COVER\n" << join(r.cover->members()) << '\n';
  }
  return r.is_packing() ? kWitness : kOk;
}

int generate_cmd(const GeneratorSpec& spec, std::uint64_t seed, int count, const Common& c) {
  const io::Format fmt = io::parse_format(c.format);
  if (count > 1 && fmt != io::Format::Graph6) throw InputError("--count above 1 needs --format graph6");
  for (int i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const Graph g = generate(spec, rng);
    if (fmt == io::Format::Graph6) {
      std::cout << io::to_graph6(g) << '\n';
    } else {
      io::write_edge_list(std::cout, g);
    }
  }
  return kOk;
}

int experiment(const std::string& file, const std::string& out_file, int threads) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open " + file);
  ExperimentSpec spec = parse_experiment_spec(in);
  if (threads > 0) spec.threads = threads;
  const std::vector<RunRecord> rows = run_experiment(spec);
  if (out_file.empty()) {
    write_csv(std::cout, rows);
  } else {
    std::ofstream out(out_file);
    if (!out) throw InputError("cannot write " + out_file);
    write_csv(out, rows);
  }
  for (const RunRecord& r : rows) {
    if (r.verdict == Verdict::Inconclusive) return kInconclusive;
  }
  return kOk;
}

int fit(const std::string& file, const std::string& x, const std::string& y, bool as_json) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open " + file);
  const Fit f = fit_exponent(in, x, y);
  if (as_json) {
    std::cout << json{{"slope", f.slope}, {"intercept", f.intercept}, {"residual", f.residual}, {"rows", f.rows}}.dump() << '\n';
  } else {
    std::cout << "slope " << f.slope << "\nintercept " << f.intercept << "\nresidual " << f.residual << "\nrows " << f.rows << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognize, count and reduce graphs without s anticomplete cycles"};
  app.require_subcommand(1);

  Common common;
  std::string file, zfile, out_file, x_col, y_col;
  int s = 2;
  int max_len = 0;
  int count = 1;
  int threads = 0;
  bool ordered = false, check_bound = false, paths = false;
  std::size_t max_cycles = 100'000, max_delta = 16;
  std::uint64_t max_paths = 0, seed = 0;
  GeneratorSpec gen;
  int result = kOk;

  auto* rec = app.add_subcommand("recognize", "Decide whether the graph has s anticomplete induced cycles");
  rec->add_option("file", file)->required();
  rec->add_option("--s", s)->check(CLI::PositiveNumber);
  rec->add_flag("--paths", paths, "Use the induced-path recognizer (s = 2)");
  rec->add_option("--max-cycles", max_cycles)->check(CLI::PositiveNumber);
  rec->add_option("--max-paths", max_paths);
  add_common(rec, common);
  rec->callback([&] { result = recognize(file, s, paths, max_cycles, max_paths, common); });

  auto* cp = app.add_subcommand("count-paths", "Count induced paths");
  cp->add_option("file", file)->required();
  cp->add_flag("--ordered", ordered, "Count each path in both directions");
  cp->add_option("--max-len", max_len, "Most vertices per path (0 = any)")->check(CLI::NonNegativeNumber);
  cp->add_option("--cap", max_paths, "Give up after this many paths (0 = none)");
  add_common(cp, common);
  cp->callback([&] { result = count_paths(file, ordered, max_len, max_paths, common); });

  auto* cc = app.add_subcommand("count-covering", "Count Z-covering paths");
  cc->add_option("file", file)->required();
  cc->add_option("--z", zfile, "Vertex list of a cycle-hitting set")->required();
  cc->add_option("--s", s)->check(CLI::PositiveNumber);
  cc->add_flag("--check-bound", check_bound, "Compare with |G|^d1 2^(d2|Z|+d3)");
  add_common(cc, common);
  cc->callback([&] { result = count_covering(file, zfile, s, check_bound, common); });

  auto* rd = app.add_subcommand("reduce", "Run the plantation reductions and their bound checks");
  rd->add_option("file", file)->required();
  rd->add_option("--z", zfile, "Vertex list of a cycle-hitting set")->required();
  rd->add_option("--s", s)->check(CLI::PositiveNumber);
  rd->add_option("--max-delta", max_delta, "Skip the covering count above this many Z edges");
  add_common(rd, common);
  rd->callback([&] { result = reduce(file, zfile, s, max_delta, common); });

  auto* hs = app.add_subcommand("hitting-set", "Find s disjoint cycles or a minimum cycle cover of a multigraph");
  hs->add_option("file", file)->required();
  hs->add_option("--s", s)->check(CLI::PositiveNumber);
  add_common(hs, common);
  hs->callback([&] { result = hitting_set(file, s, common); });

  auto* gn = app.add_subcommand("generate", "Write seeded random graphs");
  gn->add_option("--generator", gen.id)->check(CLI::IsMember({"gnp", "c4free", "forest-plus", "packed"}));
  gn->add_option("--n", gen.n)->check(CLI::NonNegativeNumber);
  gn->add_option("--p", gen.p)->check(CLI::Range(0.0, 1.0));
  gn->add_option("--k", gen.k, "Extra edges for forest-plus")->check(CLI::NonNegativeNumber);
  gn->add_option("--cycles", gen.s, "Cycle count for packed")->check(CLI::NonNegativeNumber);
  gn->add_option("--len", gen.len, "Cycle length for packed")->check(CLI::Range(3, 1'000'000));
  gn->add_option("--seed", seed)->required();
  gn->add_option("--count", count)->check(CLI::PositiveNumber);
  add_common(gn, common);
  gn->callback([&] { result = generate_cmd(gen, seed, count, common); });

  auto* ex = app.add_subcommand("experiment", "Run a JSON experiment spec and write the CSV");
  ex->add_option("spec", file)->required();
  ex->add_option("-o,--output", out_file, "CSV path (default stdout)");
  ex->add_option("--threads", threads, "Override the spec's worker count")->check(CLI::PositiveNumber);
  add_common(ex, common);
  ex->callback([&] { result = experiment(file, out_file, threads); });

  auto* ft = app.add_subcommand("fit", "Least-squares slope of log y against log x");
  ft->add_option("csv", file)->required();
  ft->add_option("--x", x_col)->required();
  ft->add_option("--y", y_col)->required();
  add_common(ft, common);
  ft->callback([&] { result = fit(file, x_col, y_col, common.json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const CapExceeded& e) {
    std::cout << "INCONCLUSIVE " << e.cap() << '\n';
    std::cerr << e.what() << '\n';
    return kInconclusive;
  } catch (const PhiTableError& e) {
    std::cerr << "phi table: " << e.what() << '\n';
    return kFailed;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kFailed;
  }
  return result;
}
