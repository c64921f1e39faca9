#include "ccdh/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

namespace ccdh {

Graph Graph::from_edges(std::uint64_t n, std::vector<Edge> edges) {
  for (auto& e : edges) {
    e = normalized(e);
    if (e.u == e.v) throw ParamError("self-loop in edge set");
    if (e.v >= n) throw ParamError("edge endpoint id >= vertex count");
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw ParamError("duplicate edge in edge set");

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : g.edges_) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::uint64_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.neighbors_.resize(2 * g.edges_.size());
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.neighbors_[cursor[e.u]++] = e.v;
    g.neighbors_[cursor[e.v]++] = e.u;
  }
  for (std::uint64_t v = 0; v < n; ++v)
    std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.neighbors_.begin() +
                  static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) return false;
  auto nb = neighbors(degree(u) <= degree(v) ? u : v);
  VertexId other = degree(u) <= degree(v) ? v : u;
  return std::binary_search(nb.begin(), nb.end(), other);
}

namespace {

std::uint64_t parse_id(std::string_view tok, std::uint64_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) +
                     ": expected non-negative integer, got '" +
                     std::string(tok) + "'");
  return value;
}

}  // namespace

Graph load_edge_list(std::istream& in, const IngestOptions& opts,
                     IngestSummary* summary) {
  IngestSummary sum;
  std::vector<Edge> raw;
  std::uint64_t max_id_seen = 0;
  bool any_id = false;

  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    ++sum.lines_read;
    std::string_view sv(line);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t' ||
                           sv.front() == '\r'))
      sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#') continue;

    std::uint64_t ids[2];
    std::size_t tok = 0;
    while (!sv.empty()) {
      std::size_t end = sv.find_first_of(" \t\r");
      std::string_view word = sv.substr(0, end);
      sv.remove_prefix(end == std::string_view::npos ? sv.size() : end + 1);
      while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t' ||
                             sv.front() == '\r'))
        sv.remove_prefix(1);
      if (word.empty()) continue;
      if (tok == 2)
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected two fields");
      ids[tok++] = parse_id(word, line_no);
    }
    if (tok != 2)
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected two fields");

    for (std::uint64_t id : ids) {
      if (opts.n_override && id >= *opts.n_override)
        throw BoundsError("line " + std::to_string(line_no) + ": id " +
                          std::to_string(id) + " >= declared vertex count " +
                          std::to_string(*opts.n_override));
      if (id > UINT32_MAX)
        throw ParseError("line " + std::to_string(line_no) +
                         ": id exceeds supported vertex range");
      max_id_seen = std::max(max_id_seen, id);
      any_id = true;
    }
    if (ids[0] == ids[1]) {
      if (!opts.drop_self_loops)
        throw ParseError("line " + std::to_string(line_no) + ": self-loop " +
                         std::to_string(ids[0]));
      ++sum.self_loops_dropped;
      continue;
    }
    raw.push_back(normalized({static_cast<VertexId>(ids[0]),
                              static_cast<VertexId>(ids[1])}));
  }

  std::sort(raw.begin(), raw.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  auto dup_begin = std::unique(raw.begin(), raw.end());
  sum.duplicates_dropped = static_cast<std::uint64_t>(raw.end() - dup_begin);
  if (sum.duplicates_dropped > 0 && !opts.dedupe)
    throw ParseError("duplicate edges present and dedupe disabled");
  raw.erase(dup_begin, raw.end());
  sum.edges_kept = raw.size();

  std::uint64_t n = opts.n_override.value_or(any_id ? max_id_seen + 1 : 0);
  if (summary) *summary = sum;
  return Graph::from_edges(n, std::move(raw));
}

Graph load_edge_list_file(const std::string& path, const IngestOptions& opts,
                          IngestSummary* summary) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return load_edge_list(in, opts, summary);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path + "' for writing");
  write_edge_list(out, g);
}

std::vector<std::uint64_t> degree_array(const Graph& g) {
  std::vector<std::uint64_t> deg(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
  return deg;
}

std::uint64_t active_vertex_count(const Graph& g) {
  std::uint64_t count = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 0) ++count;
  return count;
}

}  // namespace ccdh
