#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ccdh/types.hpp"

namespace ccdh {

struct IngestOptions {
  std::optional<std::uint64_t> n_override;  // else n = max id + 1
  bool drop_self_loops = true;              // false: self-loop is an error
  bool dedupe = true;                       // false: duplicate is an error
};

struct IngestSummary {
  std::uint64_t lines_read = 0;
  std::uint64_t edges_kept = 0;
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t duplicates_dropped = 0;
};

// Immutable simple undirected graph. Vertices are dense ids 0..n-1; isolated
// vertices allowed. Edges are stored normalized (u <= v) in sorted order and
// indexed by a CSR adjacency with ascending neighbor lists, giving O(1)
// degree and O(1) i-th-neighbor lookups. Safe to share across threads after
// construction.
class Graph {
 public:
  // Validates simplicity and bounds; throws ParamError on violations.
  static Graph from_edges(std::uint64_t n, std::vector<Edge> edges);

  std::uint64_t vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  std::uint64_t degree(VertexId v) const {
    check_vertex(v);
    return offsets_[v + 1] - offsets_[v];
  }

  // i is 0-based here; the query oracle layers the 1-based convention on top.
  VertexId neighbor(VertexId v, std::uint64_t i) const {
    check_vertex(v);
    return neighbors_[offsets_[v] + i];
  }

  std::span<const VertexId> neighbors(VertexId v) const {
    check_vertex(v);
    return {neighbors_.data() + offsets_[v],
            neighbors_.data() + offsets_[v + 1]};
  }

  bool has_edge(VertexId u, VertexId v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;
  void check_vertex(VertexId v) const {
    if (v >= n_) throw BoundsError("vertex id out of range");
  }

  std::uint64_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> offsets_;
  std::vector<VertexId> neighbors_;
};

// Line-oriented edge-list reader: "u v" per line, whitespace separated,
// '#' lines are comments, blank lines skipped. Malformed lines and ids
// >= n_override raise errors carrying the line number.
Graph load_edge_list(std::istream& in, const IngestOptions& opts = {},
                     IngestSummary* summary = nullptr);
Graph load_edge_list_file(const std::string& path,
                          const IngestOptions& opts = {},
                          IngestSummary* summary = nullptr);

// Emits the edge list in stored order; re-ingesting yields an equal Graph.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

std::vector<std::uint64_t> degree_array(const Graph& g);
std::uint64_t active_vertex_count(const Graph& g);

}  // namespace ccdh
