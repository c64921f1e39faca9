#include "ccdh/stream_engine.hpp"

#include <charconv>
#include <string>
#include <string_view>
#include <unordered_map>

#include "ccdh/samplers.hpp"

namespace ccdh {

FileEdgeStream::FileEdgeStream(std::string path, std::uint64_t declared)
    : path_(std::move(path)), declared_(declared), in_(path_) {
  if (!in_) throw ParseError("cannot open '" + path_ + "'");
}

std::optional<Edge> FileEdgeStream::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_no_;
    std::string_view sv(line);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t' ||
                           sv.front() == '\r'))
      sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#') continue;
    std::uint64_t ids[2];
    for (std::uint64_t& id : ids) {
      auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), id);
      if (ec != std::errc{})
        throw ParseError("line " + std::to_string(line_no_) +
                         ": expected two non-negative integers");
      sv.remove_prefix(static_cast<std::size_t>(ptr - sv.data()));
      while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t' ||
                             sv.front() == '\r'))
        sv.remove_prefix(1);
    }
    if (!sv.empty())
      throw ParseError("line " + std::to_string(line_no_) +
                       ": expected two fields");
    return Edge{static_cast<VertexId>(ids[0]), static_cast<VertexId>(ids[1])};
  }
  return std::nullopt;
}

void FileEdgeStream::reset() {
  in_.close();
  in_.clear();
  in_.open(path_);
  if (!in_) throw ParseError("cannot re-open '" + path_ + "'");
  line_no_ = 0;
}

namespace {

// RNG sub-stream domains; fixed so runs are reproducible per seed.
constexpr std::uint64_t kVertexDomain = 0;
constexpr std::uint64_t kReservoirDomain = 1;
constexpr std::uint64_t kEndpointDomain = 2;
constexpr std::uint64_t kAcceptDomain = 3;

void check_edge(const Edge& e, std::uint64_t n, std::uint64_t seen) {
  if (e.u >= n || e.v >= n)
    throw StreamIntegrityError("stream item " + std::to_string(seen) +
                               ": endpoint id out of declared range");
}

// Consumes the whole stream through `consume`; enforces the declared length.
template <typename F>
void drain(EdgeStream& stream, std::uint64_t n, std::uint64_t m, F&& consume) {
  std::uint64_t seen = 0;
  while (auto e = stream.next()) {
    ++seen;
    if (seen > m)
      throw StreamIntegrityError("stream longer than declared m = " +
                                 std::to_string(m));
    check_edge(*e, n, seen);
    consume(*e);
  }
  if (seen != m)
    throw StreamIntegrityError("stream ended after " + std::to_string(seen) +
                               " items, declared m = " + std::to_string(m));
}

// Exact ccdh by keeping one degree counter per vertex; the min(n, .) arm.
Ccdh exact_by_counters(EdgeStream& stream, std::uint64_t n, std::uint64_t m) {
  std::vector<std::uint64_t> degrees(n, 0);
  drain(stream, n, m, [&](const Edge& e) {
    ++degrees[e.u];
    ++degrees[e.v];
  });
  return ccdh_from_degrees(n, degrees);
}

}  // namespace

OnePassResult onepass_run(EdgeStream& stream, std::uint64_t n, std::uint64_t m,
                          const EstimatorParams& params,
                          const EngineOptions& options) {
  if (stream.declared_edges() != m)
    throw StreamIntegrityError("declared stream length disagrees with m");
  OnePassResult result;
  result.sizes = sample_sizes(n, m, params);
  const auto& sizes = result.sizes;

  if (options.allow_exact_fallback &&
      (sizes.q_fallback || sizes.r_fallback)) {
    result.estimate =
        estimate_from_exact(exact_by_counters(stream, n, m), params.h_prime);
    result.space = {n, n};
    return result;
  }

  SeededRng master(params.seed);
  SeededRng vertex_rng = master.split(kVertexDomain);
  auto watched = uniform_vertex_sample(n, sizes.q, vertex_rng);

  // Duplicates in the watched sample share one physical counter; each slot
  // still reads its own final value.
  std::unordered_map<VertexId, std::uint64_t> counters;
  counters.reserve(watched.size());
  for (VertexId v : watched) counters.emplace(v, 0);

  ReservoirBank bank(sizes.r, master, kReservoirDomain);

  drain(stream, n, m, [&](const Edge& e) {
    if (auto it = counters.find(e.u); it != counters.end()) ++it->second;
    if (auto it = counters.find(e.v); it != counters.end()) ++it->second;
    bank.offer(e);
  });

  std::vector<std::uint64_t> degree_sample(watched.size());
  for (std::size_t i = 0; i < watched.size(); ++i)
    degree_sample[i] = counters.at(watched[i]);

  std::vector<Edge> edges;
  edges.reserve(sizes.r);
  for (std::uint64_t i = 0; i < bank.size(); ++i) {
    if (!bank.held(i))
      throw StreamIntegrityError("reservoir empty after nonempty stream");
    edges.push_back(*bank.held(i));
  }

  result.bundle =
      SampleBundle::from_samples(std::move(degree_sample), std::move(edges));
  result.estimate = assemble_estimate(result.bundle, n, m, params.h_prime);
  result.space = {sizes.q + sizes.r, sizes.q + sizes.r};
  return result;
}

TwoPassResult twopass_run(EdgeStream& stream, std::uint64_t n, std::uint64_t m,
                          const EstimatorParams& params,
                          const EngineOptions& options) {
  if (stream.declared_edges() != m)
    throw StreamIntegrityError("declared stream length disagrees with m");
  params.validate();
  TwoPassResult result;
  result.q_prime = active_vertex_invocations(n, m, params);
  result.r = sample_sizes(n, m, params).r;
  result.q_fallback = result.q_prime >= n;
  result.r_fallback = result.r >= m;

  if (options.allow_exact_fallback &&
      (result.q_fallback || result.r_fallback)) {
    result.estimate =
        estimate_from_exact(exact_by_counters(stream, n, m), params.h_prime);
    result.space = {n, n};
    return result;
  }
  if (m < 1) throw ParamError("twopass_run: sampling path requires m >= 1");

  const std::uint64_t q_prime = result.q_prime;
  const std::uint64_t r = result.r;
  SeededRng master(params.seed);

  // Pass 1: q' candidate reservoirs + r tail reservoirs.
  ReservoirBank bank(q_prime + r, master, kReservoirDomain);
  drain(stream, n, m, [&](const Edge& e) { bank.offer(e); });

  // One uniform endpoint per candidate, fixed before pass 2.
  std::vector<VertexId> chosen(q_prime);
  for (std::uint64_t i = 0; i < q_prime; ++i) {
    const Edge& e = *bank.held(i);
    chosen[i] = master.split(kEndpointDomain, i).coin() ? e.v : e.u;
  }

  // Pass 2: count the chosen endpoints' degrees.
  std::unordered_map<VertexId, std::uint64_t> counters;
  counters.reserve(chosen.size());
  for (VertexId v : chosen) counters.emplace(v, 0);
  stream.reset();
  drain(stream, n, m, [&](const Edge& e) {
    if (auto it = counters.find(e.u); it != counters.end()) ++it->second;
    if (auto it = counters.find(e.v); it != counters.end()) ++it->second;
  });

  // Accept candidate i with probability 1/degree; the coin waits until the
  // degree is known, on a sub-stream reserved per candidate.
  std::vector<std::uint64_t> accepted;
  for (std::uint64_t i = 0; i < q_prime; ++i) {
    std::uint64_t d = counters.at(chosen[i]);
    SeededRng accept_rng = master.split(kAcceptDomain, i);
    if (accept_rng.uniform_below(d) == 0) accepted.push_back(d);
  }

  std::vector<Edge> tail_edges;
  tail_edges.reserve(r);
  for (std::uint64_t i = q_prime; i < bank.size(); ++i)
    tail_edges.push_back(*bank.held(i));
  auto bundle = SampleBundle::from_samples({}, std::move(tail_edges));
  result.estimate = assemble_active_estimate(accepted, bundle, m, q_prime,
                                             params.h_prime);
  result.space = {2 * (q_prime + r) + q_prime, 2 * (q_prime + r) + q_prime};
  return result;
}

}  // namespace ccdh
