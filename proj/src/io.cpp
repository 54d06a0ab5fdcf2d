#include "anticycle/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace anticycle::io {

namespace {

bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    return true;
  }
  return false;
}

std::pair<long long, long long> read_pair(std::istream& in, const char* what) {
  std::string line;
  if (!next_data_line(in, line)) throw InputError(std::string("unexpected end of input while reading ") + what);
  std::istringstream ss(line);
  long long a = 0;
  long long b = 0;
  if (!(ss >> a >> b)) throw InputError(std::string("malformed ") + what + " line: '" + line + "'");
  std::string rest;
  if (ss >> rest) throw InputError(std::string("trailing data on ") + what + " line: '" + line + "'");
  return {a, b};
}

std::pair<int, long long> read_header(std::istream& in, const ReadOptions& opts) {
  const auto [n, m] = read_pair(in, "header");
  if (n < 0 || m < 0) throw InputError("negative header values");
  if (n > opts.max_vertices) {
    throw InputError("graph has " + std::to_string(n) + " vertices, above the cap of " +
                     std::to_string(opts.max_vertices));
  }
  return {static_cast<int>(n), m};
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "edgelist") return Format::EdgeList;
  if (name == "graph6") return Format::Graph6;
  throw InputError("unknown format '" + std::string(name) + "' (expected edgelist or graph6)");
}

Graph read_edge_list(std::istream& in, const ReadOptions& opts) {
  const auto [n, m] = read_header(in, opts);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const auto [u, v] = read_pair(in, "edge");
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph parse_graph6(std::string_view line, const ReadOptions& opts) {
  constexpr std::string_view header = ">>graph6<<";
  if (line.starts_with(header)) line.remove_prefix(header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  std::size_t pos = 0;
  auto take = [&]() -> int {
    if (pos >= line.size()) throw InputError("truncated graph6 string");
    const int c = static_cast<unsigned char>(line[pos++]);
    if (c < 63 || c > 126) throw InputError("invalid graph6 character");
    return c - 63;
  };
  long long n = take();
  if (n == 63) {
    int k = 3;
    if (pos < line.size() && line[pos] == '~') {
      ++pos;
      k = 6;
    }
    n = 0;
    for (int i = 0; i < k; ++i) n = (n << 6) | take();
  }
  if (n > opts.max_vertices) {
    throw InputError("graph has " + std::to_string(n) + " vertices, above the cap of " +
                     std::to_string(opts.max_vertices));
  }
  std::vector<Edge> edges;
  int bits_left = 0;
  int current = 0;
  for (long long j = 1; j < n; ++j) {
    for (long long i = 0; i < j; ++i) {
      if (bits_left == 0) {
        current = take();
        bits_left = 6;
      }
      --bits_left;
      if ((current >> bits_left) & 1) edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
  }
  if (pos != line.size()) throw InputError("trailing characters in graph6 string");
  return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
  std::string out;
  const long long n = g.order();
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Multigraph read_multigraph(std::istream& in, const ReadOptions& opts) {
  const auto [n, m] = read_header(in, opts);
  Multigraph h(n);
  for (long long i = 0; i < m; ++i) {
    const auto [u, v] = read_pair(in, "edge");
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    h.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return h;
}

void write_multigraph(std::ostream& out, const Multigraph& h) {
  out << h.order() << ' ' << h.edges().size() << '\n';
  for (const MultiEdge& e : h.edges()) out << e.u << ' ' << e.v << '\n';
}

std::vector<int> read_vertex_list(std::istream& in) {
  std::vector<int> out;
  std::string line;
  while (next_data_line(in, line)) {
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw InputError("malformed vertex id '" + tok + "'");
      }
      if (used != tok.size()) throw InputError("malformed vertex id '" + tok + "'");
      out.push_back(v);
    }
  }
  return out;
}

namespace {
std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  return in;
}
}  // namespace

Graph load_graph(const std::filesystem::path& path, Format format, const ReadOptions& opts) {
  auto in = open(path);
  if (format == Format::EdgeList) return read_edge_list(in, opts);
  std::string line;
  if (!next_data_line(in, line)) throw InputError("empty graph6 file '" + path.string() + "'");
  return parse_graph6(line, opts);
}

Multigraph load_multigraph(const std::filesystem::path& path, const ReadOptions& opts) {
  auto in = open(path);
  return read_multigraph(in, opts);
}

std::vector<int> load_vertex_list(const std::filesystem::path& path) {
  auto in = open(path);
  return read_vertex_list(in);
}

}  // namespace anticycle::io
