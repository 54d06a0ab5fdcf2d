#include "anticycle/recognizer.hpp"

#include <algorithm>
#include <set>

namespace anticycle {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Free:
      return "FREE";
    case Verdict::Witness:
      return "WITNESS";
    case Verdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

class FamilySearch {
 public:
  FamilySearch(const Graph& g, std::vector<VertexSet> sets) : g_(g), sets_(std::move(sets)) {
    near_.reserve(sets_.size());
    min_size_ = g.order() + 1;
    for (const VertexSet& s : sets_) {
      near_.push_back(closed_neighborhood(g, s));
      min_size_ = std::min(min_size_, static_cast<int>(s.size()));
    }
  }

  std::optional<std::vector<std::size_t>> run(int count) {
    target_ = count;
    chosen_.clear();
    if (count <= 0) return std::vector<std::size_t>{};
    std::vector<std::size_t> all(sets_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    if (recurse(all, g_.empty_set())) return chosen_;
    return std::nullopt;
  }

 private:
  bool recurse(const std::vector<std::size_t>& cands, const VertexSet& blocked) {
    const int need = target_ - static_cast<int>(chosen_.size());
    if (need == 0) return true;
    // Each further member needs min_size_ unblocked vertices of its own.
    const int free_vertices = g_.order() - static_cast<int>(blocked.size());
    if (min_size_ > 0 && free_vertices / min_size_ < need) return false;
    for (std::size_t pos = 0; pos < cands.size(); ++pos) {
      if (static_cast<int>(cands.size() - pos) < need) return false;
      const std::size_t i = cands[pos];
      std::vector<std::size_t> next;
      for (std::size_t q = pos + 1; q < cands.size(); ++q) {
        if (!sets_[cands[q]].intersects(near_[i])) next.push_back(cands[q]);
      }
      if (static_cast<int>(next.size()) + 1 < need) continue;
      chosen_.push_back(i);
      if (recurse(next, blocked | near_[i])) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::vector<VertexSet> sets_;
  std::vector<VertexSet> near_;
  int min_size_ = 0;
  int target_ = 0;
  std::vector<std::size_t> chosen_;
};

std::vector<Cycle> sorted_induced_cycles(const Graph& g, std::size_t cap, bool& capped) {
  std::vector<Cycle> cycles;
  capped = false;
  for_each_induced_cycle(g, [&](const Cycle& c) {
    if (cycles.size() >= cap) {
      capped = true;
      return false;
    }
    cycles.push_back(c);
    return true;
  });
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

std::vector<VertexSet> vertex_sets(const Graph& g, const std::vector<Cycle>& cycles) {
  std::vector<VertexSet> out;
  out.reserve(cycles.size());
  for (const Cycle& c : cycles) out.push_back(vertex_set_of(g, c.vertices));
  return out;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_anticomplete_family(const Graph& g, const std::vector<VertexSet>& sets,
                                                                  int count) {
  FamilySearch search(g, sets);
  return search.run(count);
}

Recognition is_so_free(const Graph& g, int s, const RecognizerOptions& opts) {
  if (s < 1) throw InputError("s must be at least 1");
  bool capped = false;
  const std::vector<Cycle> cycles = sorted_induced_cycles(g, opts.max_cycles, capped);
  Recognition out;
  if (capped) {
    out.verdict = Verdict::Inconclusive;
    out.cap_hit = "max-cycles";
    return out;
  }
  if (auto pick = find_anticomplete_family(g, vertex_sets(g, cycles), s)) {
    PackingWitness w;
    for (std::size_t i : *pick) w.cycles.push_back(cycles[i]);
    out.verdict = Verdict::Witness;
    out.witness = std::move(w);
  }
  return out;
}

Recognition is_2o_free_via_paths(const Graph& g, const RecognizerOptions& opts) {
  Recognition out;
  std::set<Cycle> found;
  std::uint64_t paths = 0;
  for (int v = 0; v < g.order(); ++v) {
    InducedPathStream stream(g, v);
    while (stream.next()) {
      if (opts.max_paths != 0 && ++paths > opts.max_paths) {
        out.verdict = Verdict::Inconclusive;
        out.cap_hit = "max-paths";
        return out;
      }
      const auto cur = stream.current();
      if (cur.size() < 2) continue;
      for (Cycle& c : induced_cycles_extending(g, Path{{cur.begin(), cur.end()}})) found.insert(std::move(c));
      if (found.size() > opts.max_cycles) {
        out.verdict = Verdict::Inconclusive;
        out.cap_hit = "max-cycles";
        return out;
      }
    }
  }
  const std::vector<Cycle> cycles(found.begin(), found.end());
  const std::vector<VertexSet> sets = vertex_sets(g, cycles);
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const VertexSet near = closed_neighborhood(g, sets[i]);
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      if (!sets[j].intersects(near)) {
        out.verdict = Verdict::Witness;
        out.witness = PackingWitness{{cycles[i], cycles[j]}};
        return out;
      }
    }
  }
  return out;
}

PackingResult max_anticomplete_cycle_packing(const Graph& g, int limit, const RecognizerOptions& opts) {
  if (limit < 1) throw InputError("limit must be at least 1");
  bool capped = false;
  const std::vector<Cycle> cycles = sorted_induced_cycles(g, opts.max_cycles, capped);
  if (capped) throw CapExceeded("max-cycles", "more than " + std::to_string(opts.max_cycles) + " induced cycles");
  FamilySearch search(g, vertex_sets(g, cycles));
  PackingResult out;
  for (int k = 1; k <= limit; ++k) {
    auto pick = search.run(k);
    if (!pick) break;
    PackingWitness w;
    for (std::size_t i : *pick) w.cycles.push_back(cycles[i]);
    out.size = k;
    out.witness = std::move(w);
  }
  return out;
}

std::string witness_problem(const Graph& g, const PackingWitness& w, int s) {
  if (static_cast<int>(w.cycles.size()) != s) {
    return "expected " + std::to_string(s) + " cycles, got " + std::to_string(w.cycles.size());
  }
  std::vector<VertexSet> sets;
  for (std::size_t i = 0; i < w.cycles.size(); ++i) {
    if (!is_cycle(g, w.cycles[i].vertices)) return "member " + std::to_string(i) + " is not a cycle of the graph";
    sets.push_back(vertex_set_of(g, w.cycles[i].vertices));
  }
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (!anticomplete(g, sets[i], sets[j])) {
        return "members " + std::to_string(i) + " and " + std::to_string(j) + " are not anticomplete";
      }
    }
  }
  return {};
}

Cycle shortcut_to_induced(const Graph& g, const Cycle& c) {
  std::vector<int> seq = c.vertices;
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t k = seq.size();
    for (std::size_t i = 0; i < k && !changed; ++i) {
      for (std::size_t j = i + 2; j < k && !changed; ++j) {
        if (i == 0 && j == k - 1) continue;
        if (g.adjacent(seq[i], seq[j])) {
          seq = std::vector<int>(seq.begin() + static_cast<std::ptrdiff_t>(i),
                                 seq.begin() + static_cast<std::ptrdiff_t>(j) + 1);
          changed = true;
        }
      }
    }
  }
  return canonical_cycle(Cycle{std::move(seq)});
}

}  // namespace anticycle
