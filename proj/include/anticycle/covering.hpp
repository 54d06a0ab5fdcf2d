#pragma once

#include <map>
#include <optional>
#include <vector>

#include "anticycle/common.hpp"
#include "anticycle/enumeration.hpp"
#include "anticycle/graph.hpp"
#include "anticycle/phi_table.hpp"
#include "anticycle/plantation.hpp"

namespace anticycle {

/// Vertex -> multiplicity. A one-vertex component contributes its vertex
/// twice, every other component its two ends once each.
using EndMultiset = std::map<int, int>;

struct LinearForest {
  /// Canonical paths, sorted.
  std::vector<Path> components;

  friend bool operator==(const LinearForest&, const LinearForest&) = default;
};

EndMultiset end_multiset(const LinearForest& lf);

/// The only linear forest of f with end-multiset x, if there is one. Throws
/// InputError when f is not a forest, x names a vertex outside f, or a
/// multiplicity is not positive.
std::optional<LinearForest> reconstruct_linear_forest(const Graph& f, const EndMultiset& x);

/// Induced paths of p.g containing all of Z with both ends in Z, canonical
/// and sorted. Works on any plantation.
std::vector<Path> enumerate_z_covering(const Plantation& p);
BigCount count_z_covering(const Plantation& p);

struct FinalCountCheck {
  BigCount n;
  BigCount bound;
  long long d1 = 0;
  long long d2 = 0;
  long long d3 = 0;
  bool holds = false;
};

/// n(G, Z) against |G|^d1 * 2^(d2|Z| + d3).
FinalCountCheck verify_finalcount_bound(const Plantation& p, const PhiTable& phi = PhiTable::active());

/// Unordered induced paths of g, counted as paths inside G - Z plus, for each
/// nonempty Z' of z, Z'-covering middles of G - (Z - Z') extended by stubs in
/// G - Z at both ends. Throws NotCycleHitting when G - z has a cycle.
BigCount count_induced_paths_via_z(const Graph& g, const VertexSet& z, int s = 1);

}  // namespace anticycle
