#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "ccdh/estimator.hpp"
#include "ccdh/graph.hpp"
#include "ccdh/rng.hpp"

namespace ccdh {

struct QueryLog {
  std::uint64_t degree = 0;
  std::uint64_t neighbor = 0;
  std::uint64_t edge_exist = 0;
  std::uint64_t random_edge = 0;

  std::uint64_t total() const {
    return degree + neighbor + edge_exist + random_edge;
  }
  friend bool operator==(const QueryLog&, const QueryLog&) = default;
  QueryLog operator-(const QueryLog& o) const {
    return {degree - o.degree, neighbor - o.neighbor,
            edge_exist - o.edge_exist, random_edge - o.random_edge};
  }
};

enum class QueryKind : std::uint8_t { degree, neighbor, edge_exist, random_edge };

struct TranscriptEntry {
  QueryKind kind;
  std::uint64_t a = 0;  // RandomEdge takes no arguments
  std::uint64_t b = 0;
  friend bool operator==(const TranscriptEntry&, const TranscriptEntry&) =
      default;
};

// Answers are reads over the immutable graph; counters are atomic so
// concurrent drivers can share one oracle. Transcript recording is for
// tests and is not thread-safe.
class GraphOracle {
 public:
  explicit GraphOracle(const Graph& g) : graph_(g) {}

  std::uint64_t degree(VertexId v);
  // 1-based index; beyond the degree returns nothing.
  std::optional<VertexId> neighbor(VertexId v, std::uint64_t i);
  bool edge_exists(VertexId u, VertexId v);
  Edge random_edge(SeededRng& rng);

  const Graph& graph() const { return graph_; }
  QueryLog log() const;

  void enable_transcript() { record_ = true; }
  const std::vector<TranscriptEntry>& transcript() const { return transcript_; }

 private:
  void note(QueryKind kind, std::uint64_t a = 0, std::uint64_t b = 0) {
    if (record_) transcript_.push_back({kind, a, b});
  }

  const Graph& graph_;
  std::atomic<std::uint64_t> degree_count_{0};
  std::atomic<std::uint64_t> neighbor_count_{0};
  std::atomic<std::uint64_t> edge_exist_count_{0};
  std::atomic<std::uint64_t> random_edge_count_{0};
  bool record_ = false;
  std::vector<TranscriptEntry> transcript_;
};

struct QueryEngineOptions {
  bool allow_exact_fallback = true;
};

struct NonAdaptiveResult {
  CcdhEstimate estimate;
  QueryLog log;  // queries issued by this run
  SampleSizes sizes;
};

// Algorithmic contract: the full query sequence is a function of
// (n, m, params, seed) alone; q Degree queries on pre-drawn ids plus r
// RandomEdge queries. In fallback, n Degree queries instead.
NonAdaptiveResult nonadaptive_query_estimate(
    GraphOracle& oracle, std::uint64_t n, std::uint64_t m,
    const EstimatorParams& params, const QueryEngineOptions& options = {});

struct AdaptiveResult {
  CcdhEstimate estimate;
  QueryLog log;
  std::uint64_t q_prime = 0;
  std::uint64_t r = 0;
  bool q_fallback = false;  // q' >= n
  bool r_fallback = false;  // r >= m
};

// q' Active Vertex Sampling invocations (1 RandomEdge + 1 Degree each,
// rejected ones included) plus r RandomEdge for the tail: 2q' + r total.
AdaptiveResult adaptive_query_estimate(GraphOracle& oracle, std::uint64_t n,
                                       std::uint64_t m,
                                       const EstimatorParams& params,
                                       const QueryEngineOptions& options = {});

}  // namespace ccdh
