#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

#include "anticycle/covering.hpp"
#include "anticycle/forest.hpp"
#include "anticycle/harness.hpp"
#include "anticycle/hitting.hpp"
#include "anticycle/recognizer.hpp"
#include "anticycle/reductions.hpp"

using namespace anticycle;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few failures; later ones are only counted.
class Tally {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  void expect(bool cond, const std::function<std::string()>& what) {
    if (!cond) fail(what());
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, summary + "; " + std::to_string(failures_) + " failures: " + notes_};
  }

 private:
  long failures_ = 0;
  std::string notes_;
};

std::string edges_of(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " [";
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.adjacent(u, v)) out << u << '-' << v << ' ';
    }
  }
  out << ']';
  return out.str();
}

std::size_t z_delta(const Graph& g, const VertexSet& z) {
  std::size_t d = 0;
  for (int v = z.first(); v >= 0; v = z.next(v + 1)) d += g.neighborhood(v).size() - g.neighborhood(v).intersection_size(z);
  return d;
}

Outcome recognition_agreement() {
  Tally t;
  long graphs = 0, witnesses = 0;
  const auto check = [&](const Graph& g) {
    ++graphs;
    const bool expect_free = !oracle::has_anticomplete_cycles(g, 2);
    const Recognition a = is_2o_free_via_paths(g);
    const Recognition b = is_so_free(g, 2);
    t.expect(a.verdict != Verdict::Inconclusive && b.verdict != Verdict::Inconclusive, [&] { return "inconclusive on " + edges_of(g); });
    t.expect((a.verdict == Verdict::Free) == expect_free && (b.verdict == Verdict::Free) == expect_free,
             [&] { return "disagreement on " + edges_of(g); });
    for (const Recognition* r : {&a, &b}) {
      if (r->witness) t.expect(is_valid_witness(g, *r->witness, 2), [&] { return "bad witness on " + edges_of(g); });
    }
    if (!expect_free) ++witnesses;
  };
  for (int n = 0; n <= 6; ++n) {
    for (const Graph& g : oracle::all_labeled_graphs(n)) check(g);
  }
  Rng rng(1001);
  for (int i = 0; i < 10'000; ++i) {
    if (i % 2 == 0) {
      check(gnp(1 + static_cast<int>(rng.below(12)), 0.1 + 0.5 * rng.unit(), rng));
    } else {
      check(gnp(10 + static_cast<int>(rng.below(3)), 0.18 + 0.1 * rng.unit(), rng));
    }
  }
  return t.outcome(std::to_string(graphs) + " graphs, " + std::to_string(witnesses) + " not 2O-free");
}

// Every multiset over the vertices with total multiplicity at most `total`.
void for_each_multiset(int n, int total, const std::function<void(const EndMultiset&)>& visit) {
  EndMultiset x;
  const std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == n) {
      visit(x);
      return;
    }
    rec(v + 1, left);
    for (int m = 1; m <= left; ++m) {
      x[v] = m;
      rec(v + 1, left - m);
    }
    x.erase(v);
  };
  rec(0, total);
}

Outcome linear_forest_uniqueness() {
  Tally t;
  long forests = 0, multisets = 0, realised = 0;
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& f : oracle::unlabeled_forests(n)) {
      ++forests;
      std::map<EndMultiset, std::vector<LinearForest>> by_ends;
      for (const LinearForest& lf : oracle::linear_forests(f, 6)) by_ends[end_multiset(lf)].push_back(lf);
      for_each_multiset(n, 6, [&](const EndMultiset& x) {
        if (x.empty()) return;
        ++multisets;
        const auto got = reconstruct_linear_forest(f, x);
        const auto it = by_ends.find(x);
        if (it == by_ends.end()) {
          t.expect(!got.has_value(), [&] { return "spurious forest on " + edges_of(f); });
          return;
        }
        ++realised;
        t.expect(it->second.size() == 1, [&] { return "two linear forests share ends on " + edges_of(f); });
        t.expect(got && *got == it->second.front(), [&] { return "reconstruction missed on " + edges_of(f); });
      });
    }
  }
  return t.outcome(std::to_string(forests) + " forests, " + std::to_string(multisets) + " multisets, " +
                   std::to_string(realised) + " realised");
}

Outcome covering_oracle() {
  Tally t;
  Rng rng(1003);
  int done = 0, nonzero = 0;
  BigCount total = 0;
  while (done < 1000) {
    const auto rp = oracle::random_plantation(rng, 2 + static_cast<int>(rng.below(11)), 1 + static_cast<int>(rng.below(4)),
                                              0.15 + 0.3 * rng.unit(), 0.2 + 0.6 * rng.unit());
    if (z_delta(rp.g, rp.z) > 16) continue;
    ++done;
    const BigCount got = count_z_covering(make_plantation(rp.g, rp.z, 2));
    const BigCount want = oracle::count_z_covering(rp.g, rp.z);
    total += want;
    if (want > 0) ++nonzero;
    t.expect(got == want, [&] { return "count " + got.str() + " vs " + want.str() + " on " + edges_of(rp.g); });
  }
  return t.outcome("1000 plantations, " + std::to_string(nonzero) + " with covering paths, " + total.str() + " in total");
}

Outcome decomposition_identity() {
  Tally t;
  Rng rng(1004);
  BigCount total = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto rp = oracle::random_plantation(rng, 1 + static_cast<int>(rng.below(14)), static_cast<int>(rng.below(6)),
                                              0.1 + 0.3 * rng.unit(), 0.4 * rng.unit());
    const BigCount got = count_induced_paths_via_z(rp.g, rp.z);
    const BigCount want = count_induced_paths(rp.g, false);
    total += want;
    t.expect(got == want, [&] { return "count " + got.str() + " vs " + want.str() + " on " + edges_of(rp.g); });
  }
  return t.outcome("1000 instances, " + total.str() + " induced paths in total");
}

Outcome bound_or_witness() {
  Tally t;
  Rng rng(1005);
  int free_runs = 0, checks = 0, finalcounts = 0;
  for (int attempt = 0; free_runs < 1000 && attempt < 50'000; ++attempt) {
    const int s = 2 + static_cast<int>(rng.below(2));
    const auto rp = oracle::random_plantation(rng, 3 + static_cast<int>(rng.below(9)), 1 + static_cast<int>(rng.below(3)),
                                              0.15 + 0.35 * rng.unit(), 0.4 * rng.unit());
    if (oracle::has_anticomplete_cycles(rp.g, s)) continue;
    ++free_runs;
    try {
      const PipelineReport r = run_pipeline(make_plantation(rp.g, rp.z, s));
      t.expect(!r.witness, [&] { return "witness on a free graph " + edges_of(rp.g); });
      for (const BoundCheck& c : r.checks) {
        ++checks;
        t.expect(c.holds, [&] { return c.name + " fails (" + c.lhs.str() + " > " + c.rhs.str() + ") on " + edges_of(rp.g); });
      }
      if (r.finalcount) ++finalcounts;
    } catch (const std::exception& e) {
      t.fail(std::string(e.what()) + " on " + edges_of(rp.g));
    }
  }
  t.expect(free_runs == 1000, [&] { return "only " + std::to_string(free_runs) + " free instances generated"; });

  int witnesses = 0;
  for (int i = 0; i < 100; ++i) {
    const int s = 1 + static_cast<int>(rng.below(3));
    const int len = 3 + static_cast<int>(rng.below(4));
    const int n = s * len + static_cast<int>(rng.below(8));
    const Graph g = packed(s, len, n, rng);
    const VertexSet z = minimum_feedback_vertex_set(as_multigraph(g));
    try {
      const PipelineReport r = run_pipeline(make_plantation(g, z, s));
      if (r.witness) {
        ++witnesses;
        t.expect(is_valid_witness(g, *r.witness, s), [&] { return "invalid witness on " + edges_of(g); });
      }
    } catch (const std::exception& e) {
      t.fail(std::string(e.what()) + " on " + edges_of(g));
    }
  }
  return t.outcome(std::to_string(free_runs) + " free instances, " + std::to_string(checks) + " bound checks, " +
                   std::to_string(finalcounts) + " covering counts; " + std::to_string(witnesses) +
                   "/100 packed instances gave a witness");
}

std::vector<VertexSet> random_subtrees(const Graph& host, int count, Rng& rng) {
  const int n = host.order();
  std::vector<VertexSet> out;
  for (int i = 0; i < count; ++i) {
    VertexSet s(n, {static_cast<int>(rng.below(static_cast<std::uint64_t>(n)))});
    const int grow = static_cast<int>(rng.below(4));
    for (int g = 0; g < grow; ++g) {
      const VertexSet frontier = closed_neighborhood(host, s) - s;
      if (frontier.empty()) break;
      const auto members = frontier.members();
      s.insert(members[rng.below(members.size())]);
    }
    out.push_back(s);
  }
  return out;
}

bool bipartite(const Graph& g) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  for (int r = 0; r < g.order(); ++r) {
    if (colour[r] >= 0) continue;
    colour[r] = 0;
    std::vector<int> stack{r};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      const VertexSet nb = g.neighborhood(v);
      for (int w = nb.first(); w >= 0; w = nb.next(w + 1)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

Outcome forest_lemmas() {
  Tally t;
  long balanced = 0;
  for (int n = 2; n <= 8; n += 2) {
    for (const Graph& f : oracle::recursive_forests(n)) {
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != n / 2) continue;
        VertexSet a(n), b(n);
        for (int v = 0; v < n; ++v) (mask >> v & 1 ? a : b).insert(v);
        if (!is_stable(f, a) || !is_stable(f, b)) continue;
        for (int k = 0; k <= n / 2; ++k) {
          ++balanced;
          const VertexSet x = balanced_stable_set(f, a, b, k);
          t.expect(is_stable(f, x) && static_cast<int>(x.size()) == n / 2 && static_cast<int>(x.intersection_size(a)) == k,
                   [&] { return "balanced set wrong on " + edges_of(f); });
        }
      }
    }
  }

  Rng rng(1006);
  int packings = 0;
  for (int i = 0; i < 10'000; ++i) {
    const int hn = 2 + static_cast<int>(rng.below(14));
    const Graph host = forest_plus(hn, 0, rng, 0.8);
    const SubtreeFamily fam{host, random_subtrees(host, 1 + static_cast<int>(rng.below(10)), rng)};
    const int k = 1 + static_cast<int>(rng.below(4));
    for (SubtreeMode mode : {SubtreeMode::Disjoint, SubtreeMode::Anticomplete}) {
      const SubtreeHitting h = subtree_hitting_set(fam, k, mode);
      if (h.is_packing()) {
        ++packings;
        bool fine = static_cast<int>(h.packing.size()) == k;
        for (std::size_t x = 0; x < h.packing.size(); ++x) {
          for (std::size_t y = x + 1; y < h.packing.size(); ++y) {
            const VertexSet& p = fam.members[h.packing[x]];
            const VertexSet& q = fam.members[h.packing[y]];
            fine = fine && (mode == SubtreeMode::Disjoint ? p.intersection_size(q) == 0 : anticomplete(host, p, q));
          }
        }
        t.expect(fine, [&] { return "bad packing on " + edges_of(host); });
      } else {
        const int limit = mode == SubtreeMode::Disjoint ? k - 1 : 2 * (k - 1);
        bool fine = static_cast<int>(h.hit->size()) <= limit;
        for (const VertexSet& m : fam.members) fine = fine && m.intersection_size(*h.hit) > 0;
        t.expect(fine, [&] { return "bad hitting set on " + edges_of(host); });
      }
    }
  }

  int rings = 0;
  for (int attempt = 0; rings < 10'000 && attempt < 200'000; ++attempt) {
    const int hn = 3 + static_cast<int>(rng.below(14));
    const Graph host = forest_plus(hn, 0, rng, 0.9);
    const SubtreeFamily fam{host, random_subtrees(host, 2 + static_cast<int>(rng.below(7)), rng)};
    if (!bipartite(intersection_conflict_graph(fam, SubtreeMode::Anticomplete))) continue;
    ++rings;
    t.expect(check_ring(fam).ok, [&] { return "ring violation on " + edges_of(host); });
  }
  t.expect(rings == 10'000, [&] { return "only " + std::to_string(rings) + " bipartite families"; });
  return t.outcome(std::to_string(balanced) + " balanced cases, 10000 families x 2 modes (" + std::to_string(packings) +
                   " packings), " + std::to_string(rings) + " ring checks");
}

Outcome erdos_posa() {
  Tally t;
  Rng rng(1007);
  int packings = 0;
  for (int i = 0; i < 1000; ++i) {
    const Multigraph h = oracle::random_multigraph(rng, 8, 16);
    const int best = oracle::min_feedback_vertex_set(h);
    for (int s = 1; s <= 3; ++s) {
      const PackOrCover r = pack_or_cover(h, s);
      if (r.is_packing()) {
        ++packings;
        std::vector<int> seen(static_cast<std::size_t>(h.order()), 0);
        bool fine = static_cast<int>(r.packing.size()) == s;
        for (const MultiCycle& c : r.packing) {
          fine = fine && multicycle_problem(h, c).empty();
          for (int v : c.vertices) fine = fine && seen[v]++ == 0;
        }
        t.expect(fine, [&] { return "bad packing for s=" + std::to_string(s); });
      } else {
        t.expect(static_cast<int>(r.cover->size()) == best && is_cycle_cover(h, *r.cover),
                 [&] { return "cover " + std::to_string(r.cover->size()) + " vs " + std::to_string(best); });
      }
    }
  }
  return t.outcome("1000 multigraphs x s=1..3, " + std::to_string(packings) + " packings");
}

Outcome growth() {
  Tally t;
  Rng rng(1008);
  std::vector<double> xs, ys;
  std::ostringstream means;
  for (int n : {16, 32, 64, 128}) {
    double sum = 0;
    int free_graphs = 0;
    for (int attempt = 0; free_graphs < 8 && attempt < 200; ++attempt) {
      const Graph g = forest_plus(n, 3, rng);
      if (is_so_free(g, 2).verdict != Verdict::Free) continue;
      ++free_graphs;
      const BigCount c = count_induced_paths(g, true);
      sum += c.convert_to<double>();
      xs.push_back(n);
      ys.push_back(c.convert_to<double>());
    }
    t.expect(free_graphs == 8, [&] { return "few free graphs at n=" + std::to_string(n); });
    means << ' ' << n << ':' << static_cast<long long>(sum / std::max(free_graphs, 1));

    for (int i = 0; i < 8; ++i) {
      const Graph f = forest_plus(n, 0, rng, 0.9);
      t.expect(count_induced_paths(f, true) <= BigCount(n) * n, [&] { return "forest above n^2 at n=" + std::to_string(n); });
    }
  }
  const Fit fit = fit_loglog(xs, ys);
  t.expect(std::isfinite(fit.slope), [] { return std::string("slope is not finite"); });
  std::ostringstream summary;
  summary << "slope " << fit.slope << " over " << fit.rows << " free graphs; mean ordered counts" << means.str();
  return t.outcome(summary.str());
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"recognizers agree with the brute-force oracle", recognition_agreement},
      {"linear forests are determined by their ends", linear_forest_uniqueness},
      {"Z-covering counts match brute force", covering_oracle},
      {"path counts through Z match direct counts", decomposition_identity},
      {"reductions meet their bounds or give valid witnesses", bound_or_witness},
      {"forest lemmas", forest_lemmas},
      {"pack or cover matches the minimum feedback vertex set", erdos_posa},
      {"induced path growth on forest-plus graphs", growth},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << o.detail << " ("
              << static_cast<int>(secs) << "s)" << std::endl;
  }
  return all ? 0 : 1;
}
