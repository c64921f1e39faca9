#include "ccdh/estimator.hpp"

#include <algorithm>
#include <cmath>

#include "ccdh/samplers.hpp"

namespace ccdh {

void EstimatorParams::validate() const {
  if (!(eps_d > 0 && eps_d < 1))
    throw ParamError("eps_d must lie in (0,1)");
  if (!(eps_r > 0 && eps_r < 1))
    throw ParamError("eps_r must lie in (0,1)");
  if (!(c > 0)) throw ParamError("c must be positive");
  if (h_prime < 1) throw ParamError("h_prime must be >= 1");
}

namespace {

std::uint64_t ceil_size(double value) {
  double c = std::ceil(value);
  if (!(c < 9.2e18)) return UINT64_MAX;
  return static_cast<std::uint64_t>(c);
}

}  // namespace

SampleSizes sample_sizes(std::uint64_t n, std::uint64_t m,
                         const EstimatorParams& params) {
  params.validate();
  if (n < 2) throw ParamError("sample_sizes: n must be >= 2");
  double ln_n = std::log(static_cast<double>(n));
  double hp = static_cast<double>(params.h_prime);
  SampleSizes s;
  s.q = ceil_size(params.c * static_cast<double>(n) * ln_n /
                  (hp * params.eps_r * params.eps_r));
  s.r = ceil_size(params.c * static_cast<double>(m) * ln_n /
                  (hp * params.eps_d * params.eps_d));
  s.q_fallback = s.q >= n;
  s.r_fallback = s.r >= m;
  return s;
}

std::uint64_t active_vertex_invocations(std::uint64_t n, std::uint64_t m,
                                        const EstimatorParams& params) {
  params.validate();
  if (n < 2) throw ParamError("active_vertex_invocations: n must be >= 2");
  double ln_n = std::log(static_cast<double>(n));
  return ceil_size(params.c * static_cast<double>(m) * ln_n /
                   (static_cast<double>(params.h_prime) * params.eps_r *
                    params.eps_r));
}

SampleBundle SampleBundle::from_samples(std::vector<std::uint64_t> degrees,
                                        std::vector<Edge> edges) {
  SampleBundle b;
  b.q = degrees.size();
  b.r = edges.size();
  b.degree_sample = std::move(degrees);
  b.edge_sample = std::move(edges);
  b.endpoint_counts.reserve(2 * b.edge_sample.size());
  for (const Edge& e : b.edge_sample) {
    ++b.endpoint_counts[e.u];
    ++b.endpoint_counts[e.v];
  }
  return b;
}

std::unordered_map<VertexId, double> approx_degrees(const SampleBundle& bundle,
                                                    std::uint64_t m) {
  if (bundle.r < 1) throw ParamError("approx_degrees: r must be >= 1");
  std::unordered_map<VertexId, double> approx;
  approx.reserve(bundle.endpoint_counts.size());
  double scale = static_cast<double>(m) / static_cast<double>(bundle.r);
  for (const auto& [v, count] : bundle.endpoint_counts)
    approx.emplace(v, scale * static_cast<double>(count));
  return approx;
}

double head_estimate(const SampleBundle& bundle, std::uint64_t n,
                     std::uint64_t d) {
  if (bundle.q < 1) throw ParamError("head_estimate: q must be >= 1");
  if (d < 1) throw ParamError("head_estimate: d must be >= 1");
  std::uint64_t count = 0;
  for (std::uint64_t deg : bundle.degree_sample)
    if (deg >= d) ++count;
  return static_cast<double>(n) * static_cast<double>(count) /
         static_cast<double>(bundle.q);
}

std::uint64_t tail_estimate(
    const std::unordered_map<VertexId, double>& approx, std::uint64_t d) {
  if (d < 1) throw ParamError("tail_estimate: d must be >= 1");
  std::uint64_t count = 0;
  for (const auto& [v, dv] : approx)
    if (dv >= static_cast<double>(d)) ++count;
  return count;
}

double head_estimate_active(std::span<const std::uint64_t> accepted_degrees,
                            std::uint64_t m, std::uint64_t q_prime,
                            std::uint64_t d) {
  if (q_prime < 1) throw ParamError("head_estimate_active: q' must be >= 1");
  if (d < 1) throw ParamError("head_estimate_active: d must be >= 1");
  std::uint64_t count = 0;
  for (std::uint64_t deg : accepted_degrees)
    if (deg >= d) ++count;
  return 2.0 * static_cast<double>(m) * static_cast<double>(count) /
         static_cast<double>(q_prime);
}

namespace {

// Suffix counts of degree values capped at h', for the head rules:
// head_count[d] = |{deg in sample : deg >= d}| for d in 1..h'.
std::vector<std::uint64_t> head_suffix_counts(
    std::span<const std::uint64_t> degrees, std::uint64_t h_prime) {
  std::vector<std::uint64_t> hist(h_prime + 1, 0);
  for (std::uint64_t deg : degrees) ++hist[std::min(deg, h_prime)];
  std::vector<std::uint64_t> suffix(h_prime + 1, 0);
  std::uint64_t acc = 0;
  for (std::uint64_t d = h_prime + 1; d-- > 1;) {
    acc += hist[d];
    suffix[d] = acc;
  }
  return suffix;
}

// Tail counts |{v : d_hat(v) >= d}| for integer d > h', dense up to the
// largest populated degree; d_hat(v) = (m/r)*count as in approx_degrees,
// and floor(d_hat) >= d iff d_hat >= d for integer d.
std::vector<std::uint64_t> tail_suffix_counts(const SampleBundle& bundle,
                                              std::uint64_t m,
                                              std::uint64_t h_prime) {
  if (bundle.r == 0) return {};
  double scale = static_cast<double>(m) / static_cast<double>(bundle.r);
  auto floor_dhat = [scale](std::uint64_t count) {
    return static_cast<std::uint64_t>(
        std::floor(scale * static_cast<double>(count)));
  };
  std::uint64_t max_floor = 0;
  for (const auto& [v, count] : bundle.endpoint_counts)
    max_floor = std::max(max_floor, floor_dhat(count));
  if (max_floor <= h_prime) return {};
  std::vector<std::uint64_t> hist(max_floor - h_prime, 0);
  for (const auto& [v, count] : bundle.endpoint_counts) {
    auto f = floor_dhat(count);
    if (f > h_prime) ++hist[f - h_prime - 1];
  }
  std::vector<std::uint64_t> suffix(hist.size());
  std::uint64_t acc = 0;
  for (std::uint64_t i = hist.size(); i-- > 0;) {
    acc += hist[i];
    suffix[i] = acc;
  }
  return suffix;
}

CcdhEstimate assemble(std::span<const std::uint64_t> head_degrees,
                      double head_scale, const SampleBundle& tail_bundle,
                      std::uint64_t m, std::uint64_t h_prime) {
  auto head = head_suffix_counts(head_degrees, h_prime);
  auto tail = tail_suffix_counts(tail_bundle, m, h_prime);
  CcdhEstimate est;
  est.boundary = h_prime;
  est.values.resize(h_prime + tail.size());
  for (std::uint64_t d = 1; d <= h_prime; ++d)
    est.values[d - 1] = head_scale * static_cast<double>(head[d]);
  for (std::uint64_t i = 0; i < tail.size(); ++i)
    est.values[h_prime + i] = static_cast<double>(tail[i]);
  return est;
}

}  // namespace

CcdhEstimate assemble_estimate(const SampleBundle& bundle, std::uint64_t n,
                               std::uint64_t m, std::uint64_t h_prime) {
  if (bundle.q < 1) throw ParamError("assemble_estimate: q must be >= 1");
  double scale = static_cast<double>(n) / static_cast<double>(bundle.q);
  return assemble(bundle.degree_sample, scale, bundle, m, h_prime);
}

CcdhEstimate assemble_active_estimate(
    std::span<const std::uint64_t> accepted_degrees,
    const SampleBundle& tail_bundle, std::uint64_t m, std::uint64_t q_prime,
    std::uint64_t h_prime) {
  if (q_prime < 1)
    throw ParamError("assemble_active_estimate: q' must be >= 1");
  double scale = 2.0 * static_cast<double>(m) / static_cast<double>(q_prime);
  return assemble(accepted_degrees, scale, tail_bundle, m, h_prime);
}

CcdhEstimate estimate_from_exact(const Ccdh& exact, std::uint64_t h_prime) {
  CcdhEstimate est;
  est.boundary = h_prime;
  est.mode = EstimateMode::exact_fallback;
  est.values.resize(exact.d_max());
  for (std::uint64_t d = 1; d <= exact.d_max(); ++d)
    est.values[d - 1] = static_cast<double>(exact.values[d]);
  return est;
}

std::vector<std::uint64_t> GraphSampleAccess::degree_sample(std::uint64_t q,
                                                            SeededRng& rng) {
  auto ids = uniform_vertex_sample(graph_.vertex_count(), q, rng);
  std::vector<std::uint64_t> degrees(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    degrees[i] = graph_.degree(ids[i]);
  return degrees;
}

std::vector<Edge> GraphSampleAccess::edge_sample(std::uint64_t r,
                                                 SeededRng& rng) {
  return random_edges_with_replacement(graph_, r, rng);
}

std::vector<std::uint64_t> GraphSampleAccess::all_degrees() {
  return degree_array(graph_);
}

CcdhEstimate combine_estimate(SampleAccess& access, std::uint64_t n,
                              std::uint64_t m, const EstimatorParams& params,
                              const CombineOptions& options) {
  SampleSizes sizes = sample_sizes(n, m, params);
  if (options.allow_exact_fallback && (sizes.q_fallback || sizes.r_fallback)) {
    auto degrees = access.all_degrees();
    return estimate_from_exact(ccdh_from_degrees(n, degrees), params.h_prime);
  }
  SeededRng master(params.seed);
  SeededRng vertex_rng = master.split(0);
  SeededRng edge_rng = master.split(1);
  auto degrees = access.degree_sample(sizes.q, vertex_rng);
  auto edges = access.edge_sample(sizes.r, edge_rng);
  auto bundle = SampleBundle::from_samples(std::move(degrees), std::move(edges));
  return assemble_estimate(bundle, n, m, params.h_prime);
}

}  // namespace ccdh
