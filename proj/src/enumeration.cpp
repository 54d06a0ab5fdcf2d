#include "anticycle/enumeration.hpp"

#include <algorithm>
#include <set>

namespace anticycle {

namespace {

bool distinct_in_range(const Graph& g, std::span<const int> seq) {
  VertexSet seen(g.order());
  for (int v : seq) {
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  return true;
}

}  // namespace

bool is_path(const Graph& g, std::span<const int> seq) {
  if (seq.empty() || !distinct_in_range(g, seq)) return false;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (!g.adjacent(seq[i], seq[i + 1])) return false;
  }
  return true;
}

bool is_induced_path(const Graph& g, std::span<const int> seq) {
  if (!is_path(g, seq)) return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 2; j < seq.size(); ++j) {
      if (g.adjacent(seq[i], seq[j])) return false;
    }
  }
  return true;
}

bool is_cycle(const Graph& g, std::span<const int> seq) {
  if (seq.size() < 3 || !distinct_in_range(g, seq)) return false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!g.adjacent(seq[i], seq[(i + 1) % seq.size()])) return false;
  }
  return true;
}

bool is_induced_cycle(const Graph& g, std::span<const int> seq) {
  if (!is_cycle(g, seq)) return false;
  const std::size_t k = seq.size();
  std::size_t edges = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (g.adjacent(seq[i], seq[j])) ++edges;
    }
  }
  return edges == k;
}

Path canonical_path(Path p) {
  std::vector<int> rev(p.vertices.rbegin(), p.vertices.rend());
  if (rev < p.vertices) p.vertices = std::move(rev);
  return p;
}

Cycle canonical_cycle(Cycle c) {
  auto& v = c.vertices;
  if (v.empty()) return c;
  std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
  if (v.size() > 2 && v[1] > v.back()) std::reverse(v.begin() + 1, v.end());
  return c;
}

VertexSet vertex_set_of(const Graph& g, std::span<const int> seq) {
  VertexSet s(g.order());
  for (int v : seq) {
    g.check_vertex(v);
    s.insert(v);
  }
  return s;
}

InducedPathStream::InducedPathStream(const Graph& g, int start, int max_len, const VertexSet* allowed)
    : g_(&g),
      start_(start),
      max_len_(max_len < 1 ? static_cast<std::size_t>(g.order()) : static_cast<std::size_t>(max_len)) {
  g.check_vertex(start);
  if (allowed) {
    g.check_set(*allowed);
    allowed_ = *allowed;
  }
}

void InducedPathStream::push(int v) {
  const std::size_t d = path_.size();
  if (blocked_.size() <= d) blocked_.emplace_back(g_->order());
  if (d == 0) {
    blocked_[0].clear();
  } else {
    blocked_[d] = blocked_[d - 1];
    const int prev = path_.back();
    blocked_[d] |= g_->neighborhood(prev);
    blocked_[d].insert(prev);
  }
  path_.push_back(v);
  Frame f;
  if (path_.size() < max_len_) {
    VertexSet cand = g_->neighborhood(v) - blocked_[d];
    if (allowed_) cand &= *allowed_;
    f.candidates = cand.members();
  }
  if (frames_.size() <= d) {
    frames_.push_back(std::move(f));
  } else {
    frames_[d] = std::move(f);
  }
}

bool InducedPathStream::next() {
  if (!started_) {
    started_ = true;
    if (allowed_ && !allowed_->contains(start_)) return false;
    push(start_);
    return true;
  }
  while (!path_.empty()) {
    Frame& top = frames_[path_.size() - 1];
    if (top.next < top.candidates.size()) {
      push(top.candidates[top.next++]);
      return true;
    }
    path_.pop_back();
  }
  return false;
}

std::uint64_t count_induced_paths_from(const Graph& g, int v, int max_len, std::uint64_t cap) {
  InducedPathStream s(g, v, max_len);
  std::uint64_t count = 0;
  while (s.next()) {
    ++count;
    if (cap != 0 && count > cap) {
      throw CapExceeded("max-paths", "more than " + std::to_string(cap) + " induced paths from vertex " +
                                         std::to_string(v));
    }
  }
  return count;
}

BigCount count_induced_paths(const Graph& g, bool ordered, int max_len, std::uint64_t cap) {
  BigCount total = 0;
  std::uint64_t seen = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (cap != 0 && seen >= cap) {
      throw CapExceeded("max-paths", "more than " + std::to_string(cap) + " induced paths");
    }
    const std::uint64_t c = count_induced_paths_from(g, v, max_len, cap == 0 ? 0 : cap - seen);
    total += c;
    seen += c;
  }
  if (ordered) return total;
  // Each path with an edge was seen once per orientation.
  return (total + g.order()) / 2;
}

std::vector<Cycle> induced_cycles_extending(const Graph& g, const Path& p) {
  if (!is_induced_path(g, p.vertices)) throw InputError("path is not an induced path of the graph");
  std::vector<Cycle> out;
  if (p.length() < 2) return out;
  VertexSet cand = g.neighborhood(p.front()) & g.neighborhood(p.back());
  for (std::size_t i = 1; i + 1 < p.length(); ++i) {
    cand -= g.neighborhood(p.vertices[i]);
    cand.erase(p.vertices[i]);
  }
  cand.for_each([&](int w) {
    Cycle c{p.vertices};
    c.vertices.push_back(w);
    out.push_back(canonical_cycle(std::move(c)));
  });
  return out;
}

void for_each_induced_cycle(const Graph& g, const std::function<bool(const Cycle&)>& visit) {
  const int n = g.order();
  bool stop = false;
  std::vector<int> path;
  // inner[d] = union of closed neighbourhoods of path[1..d-1]
  std::vector<VertexSet> inner(static_cast<std::size_t>(n) + 2, VertexSet(n));
  for (int v = 0; v < n && !stop; ++v) {
    VertexSet allowed(n);
    for (int u = v + 1; u < n; ++u) allowed.insert(u);
    const VertexSet near_v = g.neighborhood(v) & allowed;
    VertexSet closed_v = g.neighborhood(v);
    closed_v.insert(v);

    // Path is v, a = path[1], ..., last. Cycles close through
    // a vertex w adjacent to v and last, with w > a for canonical orientation.
    std::function<void()> extend = [&]() {
      const std::size_t k = path.size() - 1;
      const int last = path.back();
      const VertexSet& blocked = inner[k];
      VertexSet closers = (near_v & g.neighborhood(last)) - blocked;
      const int a = path[1];
      closers.for_each([&](int w) {
        if (stop || w <= a) return;
        Cycle c{path};
        c.vertices.push_back(w);
        if (!visit(c)) stop = true;
      });
      if (stop) return;
      VertexSet ext = (g.neighborhood(last) & allowed) - closed_v - blocked;
      inner[k + 1] = blocked;
      inner[k + 1] |= g.neighborhood(last);
      inner[k + 1].insert(last);
      ext.for_each([&](int w) {
        if (stop) return;
        path.push_back(w);
        extend();
        path.pop_back();
      });
    };

    near_v.for_each([&](int a) {
      if (stop) return;
      path.assign({v, a});
      inner[1].clear();
      extend();
    });
  }
}

std::vector<Cycle> enumerate_induced_cycles(const Graph& g) {
  std::vector<Cycle> out;
  for_each_induced_cycle(g, [&](const Cycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::vector<std::array<int, 4>> four_cycle_vertex_sets(const Graph& g) {
  std::set<std::array<int, 4>> found;
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int c = a + 1; c < n; ++c) {
      const std::vector<int> common = (g.neighborhood(a) & g.neighborhood(c)).members();
      for (std::size_t i = 0; i < common.size(); ++i) {
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          std::array<int, 4> q{a, common[i], c, common[j]};
          std::sort(q.begin(), q.end());
          found.insert(q);
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

VertexSet exclusion_set(const Graph& g, const Cycle& c) {
  if (c.length() != 4 || !is_cycle(g, c.vertices)) throw InputError("exclusion set needs a 4-cycle of the graph");
  return closed_neighborhood(g, vertex_set_of(g, c.vertices)).complement();
}

std::optional<Path> head(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return std::nullopt;
  for (int v : p.vertices) g.check_vertex(v);
  std::size_t best = 0;
  for (const auto& q : four_cycle_vertex_sets(g)) {
    const VertexSet near = closed_neighborhood(g, VertexSet::from(g.order(), q));
    std::size_t j = 0;
    while (j < p.length() && !near.contains(p.vertices[j])) ++j;
    best = std::max(best, j);
    if (best == p.length()) break;
  }
  if (best == 0) return std::nullopt;
  return Path{std::vector<int>(p.vertices.begin(), p.vertices.begin() + static_cast<std::ptrdiff_t>(best))};
}

}  // namespace anticycle
