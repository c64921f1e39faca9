#include "ccdh/query_engine.hpp"

#include "ccdh/samplers.hpp"

namespace ccdh {

std::uint64_t GraphOracle::degree(VertexId v) {
  degree_count_.fetch_add(1, std::memory_order_relaxed);
  note(QueryKind::degree, v);
  return graph_.degree(v);
}

std::optional<VertexId> GraphOracle::neighbor(VertexId v, std::uint64_t i) {
  neighbor_count_.fetch_add(1, std::memory_order_relaxed);
  note(QueryKind::neighbor, v, i);
  if (i < 1) throw ParamError("neighbor index is 1-based");
  if (i > graph_.degree(v)) return std::nullopt;
  return graph_.neighbor(v, i - 1);
}

bool GraphOracle::edge_exists(VertexId u, VertexId v) {
  edge_exist_count_.fetch_add(1, std::memory_order_relaxed);
  note(QueryKind::edge_exist, u, v);
  return graph_.has_edge(u, v);
}

Edge GraphOracle::random_edge(SeededRng& rng) {
  random_edge_count_.fetch_add(1, std::memory_order_relaxed);
  note(QueryKind::random_edge);
  if (graph_.edge_count() == 0)
    throw ParamError("random_edge on an edgeless graph");
  return graph_.edges()[rng.uniform_below(graph_.edge_count())];
}

QueryLog GraphOracle::log() const {
  return {degree_count_.load(std::memory_order_relaxed),
          neighbor_count_.load(std::memory_order_relaxed),
          edge_exist_count_.load(std::memory_order_relaxed),
          random_edge_count_.load(std::memory_order_relaxed)};
}

namespace {

class OracleSampleAccess final : public SampleAccess {
 public:
  OracleSampleAccess(GraphOracle& oracle, std::uint64_t n)
      : oracle_(oracle), n_(n) {}

  std::vector<std::uint64_t> degree_sample(std::uint64_t q,
                                           SeededRng& rng) override {
    // Ids are drawn in full before any answer is read (non-adaptive).
    auto ids = uniform_vertex_sample(n_, q, rng);
    std::vector<std::uint64_t> degrees(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
      degrees[i] = oracle_.degree(ids[i]);
    return degrees;
  }

  std::vector<Edge> edge_sample(std::uint64_t r, SeededRng& rng) override {
    std::vector<Edge> edges(r);
    for (auto& e : edges) e = oracle_.random_edge(rng);
    return edges;
  }

  std::vector<std::uint64_t> all_degrees() override {
    std::vector<std::uint64_t> degrees(n_);
    for (std::uint64_t v = 0; v < n_; ++v)
      degrees[v] = oracle_.degree(static_cast<VertexId>(v));
    return degrees;
  }

 private:
  GraphOracle& oracle_;
  std::uint64_t n_;
};

class OracleAccessPort final : public AccessPort {
 public:
  explicit OracleAccessPort(GraphOracle& oracle) : oracle_(oracle) {}
  Edge random_edge(SeededRng& rng) override { return oracle_.random_edge(rng); }
  std::uint64_t degree(VertexId v) override { return oracle_.degree(v); }

 private:
  GraphOracle& oracle_;
};

constexpr std::uint64_t kEdgeDomain = 1;
constexpr std::uint64_t kInvocationDomain = 2;

}  // namespace

NonAdaptiveResult nonadaptive_query_estimate(GraphOracle& oracle,
                                             std::uint64_t n, std::uint64_t m,
                                             const EstimatorParams& params,
                                             const QueryEngineOptions& options) {
  NonAdaptiveResult result;
  result.sizes = sample_sizes(n, m, params);
  QueryLog before = oracle.log();
  OracleSampleAccess access(oracle, n);
  result.estimate = combine_estimate(access, n, m, params,
                                     {.allow_exact_fallback =
                                          options.allow_exact_fallback});
  result.log = oracle.log() - before;
  return result;
}

AdaptiveResult adaptive_query_estimate(GraphOracle& oracle, std::uint64_t n,
                                       std::uint64_t m,
                                       const EstimatorParams& params,
                                       const QueryEngineOptions& options) {
  AdaptiveResult result;
  result.q_prime = active_vertex_invocations(n, m, params);
  result.r = sample_sizes(n, m, params).r;
  result.q_fallback = result.q_prime >= n;
  result.r_fallback = result.r >= m;
  QueryLog before = oracle.log();

  if (options.allow_exact_fallback &&
      (result.q_fallback || result.r_fallback)) {
    std::vector<std::uint64_t> degrees(n);
    for (std::uint64_t v = 0; v < n; ++v)
      degrees[v] = oracle.degree(static_cast<VertexId>(v));
    result.estimate =
        estimate_from_exact(ccdh_from_degrees(n, degrees), params.h_prime);
    result.log = oracle.log() - before;
    return result;
  }
  if (m < 1)
    throw ParamError("adaptive_query_estimate: sampling path requires m >= 1");

  SeededRng master(params.seed);
  OracleAccessPort port(oracle);
  std::vector<std::uint64_t> accepted;
  for (std::uint64_t i = 0; i < result.q_prime; ++i) {
    SeededRng rng = master.split(kInvocationDomain, i);
    if (auto v = active_vertex_sample(port, rng)) accepted.push_back(v->degree);
  }

  SeededRng edge_rng = master.split(kEdgeDomain);
  std::vector<Edge> tail_edges(result.r);
  for (auto& e : tail_edges) e = oracle.random_edge(edge_rng);
  auto bundle = SampleBundle::from_samples({}, std::move(tail_edges));
  result.estimate = assemble_active_estimate(accepted, bundle, m,
                                             result.q_prime, params.h_prime);
  result.log = oracle.log() - before;
  return result;
}

}  // namespace ccdh
