#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "anticycle/enumeration.hpp"
#include "anticycle/graph.hpp"

namespace anticycle {

/// s cycles, pairwise vertex-disjoint and pairwise anticomplete.
struct PackingWitness {
  std::vector<Cycle> cycles;
  friend bool operator==(const PackingWitness&, const PackingWitness&) = default;
};

enum class Verdict { Free, Witness, Inconclusive };

const char* to_string(Verdict v);

struct Recognition {
  Verdict verdict = Verdict::Free;
  std::optional<PackingWitness> witness;
  /// Names the cap when the verdict is Inconclusive.
  std::string cap_hit;
};

struct RecognizerOptions {
  std::size_t max_cycles = 100'000;
  /// Only used by the path-based recognizer; 0 = unbounded.
  std::uint64_t max_paths = 0;
};

/// Exact: searches for s pairwise anticomplete induced cycles. Witnesses are
/// the lexicographically smallest choice in canonical cycle order.
Recognition is_so_free(const Graph& g, int s, const RecognizerOptions& opts = {});

/// The three-step procedure: induced paths from every vertex, their one-vertex
/// cycle extensions, then a pairwise scan.
Recognition is_2o_free_via_paths(const Graph& g, const RecognizerOptions& opts = {});

struct PackingResult {
  int size = 0;
  std::optional<PackingWitness> witness;
};

/// Largest k <= limit with k pairwise anticomplete cycles. Throws CapExceeded
/// when the induced-cycle cap is hit.
PackingResult max_anticomplete_cycle_packing(const Graph& g, int limit, const RecognizerOptions& opts = {});

/// Empty when the witness is a valid packing of exactly s cycles of g;
/// otherwise a description of the first problem found.
std::string witness_problem(const Graph& g, const PackingWitness& w, int s);
inline bool is_valid_witness(const Graph& g, const PackingWitness& w, int s) { return witness_problem(g, w, s).empty(); }

/// Repeatedly shortcuts chords; the result is an induced cycle on a subset of
/// the input's vertices.
Cycle shortcut_to_induced(const Graph& g, const Cycle& c);

/// Exact search for `count` pairwise anticomplete members among vertex sets
/// given in priority order. Returns the lexicographically smallest index
/// tuple, or nothing.
std::optional<std::vector<std::size_t>> find_anticomplete_family(const Graph& g, const std::vector<VertexSet>& sets,
                                                                  int count);

}  // namespace anticycle
