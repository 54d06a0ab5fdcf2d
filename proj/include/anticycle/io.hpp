#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "anticycle/graph.hpp"

namespace anticycle::io {

enum class Format { EdgeList, Graph6 };

Format parse_format(std::string_view name);

struct ReadOptions {
  int max_vertices = kDefaultVertexCap;
};

/// First line `n m`, then m lines `u v`, 0-based. Blank lines and lines
/// starting with '#' are skipped.
Graph read_edge_list(std::istream& in, const ReadOptions& opts = {});
void write_edge_list(std::ostream& out, const Graph& g);

/// Standard graph6, one graph per line, optional `>>graph6<<` header.
Graph parse_graph6(std::string_view line, const ReadOptions& opts = {});
std::string to_graph6(const Graph& g);

/// Same layout as the graph edge list, but loops and repeated lines are kept.
Multigraph read_multigraph(std::istream& in, const ReadOptions& opts = {});
void write_multigraph(std::ostream& out, const Multigraph& h);

/// Whitespace-separated vertex ids.
std::vector<int> read_vertex_list(std::istream& in);

Graph load_graph(const std::filesystem::path& path, Format format, const ReadOptions& opts = {});
Multigraph load_multigraph(const std::filesystem::path& path, const ReadOptions& opts = {});
std::vector<int> load_vertex_list(const std::filesystem::path& path);

}  // namespace anticycle::io
