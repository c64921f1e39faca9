#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "ccdh/ccdh.hpp"
#include "ccdh/graph.hpp"
#include "ccdh/rng.hpp"

namespace ccdh {

struct EstimatorParams {
  double eps_d = 0.1;            // domain slack
  double eps_r = 0.1;            // range slack
  double c = 0.01;               // universal constant in the sample sizes
  std::uint64_t h_prime = 1;     // head/tail threshold, in [h/2, h]
  std::uint64_t seed = 1;

  void validate() const;
};

// q = ceil(c*n*ln(n)/(h'*eps_r^2)), r = ceil(c*m*ln(n)/(h'*eps_d^2)).
// Fallback flags mark the regimes q >= n and r >= m where exact computation
// is no more expensive than sampling.
struct SampleSizes {
  std::uint64_t q = 0;
  std::uint64_t r = 0;
  bool q_fallback = false;
  bool r_fallback = false;
};

SampleSizes sample_sizes(std::uint64_t n, std::uint64_t m,
                         const EstimatorParams& params);

// Invocation count q' = ceil(c*m*ln(n)/(h'*eps_r^2)) for the active-vertex
// variant of the head estimate.
std::uint64_t active_vertex_invocations(std::uint64_t n, std::uint64_t m,
                                        const EstimatorParams& params);

struct SampleBundle {
  std::vector<std::uint64_t> degree_sample;  // degrees of the q sampled vertices
  std::vector<Edge> edge_sample;             // r uniform edges
  std::unordered_map<VertexId, std::uint64_t> endpoint_counts;
  std::uint64_t q = 0;
  std::uint64_t r = 0;

  static SampleBundle from_samples(std::vector<std::uint64_t> degrees,
                                   std::vector<Edge> edges);
};

// d_hat(v) = m * |{e in sample : v in e}| / r for sampled endpoints, 0
// elsewhere (absent keys). Unbiased for d(v).
std::unordered_map<VertexId, double> approx_degrees(const SampleBundle& bundle,
                                                    std::uint64_t m);

// Head rule: n * |{deg in sample : deg >= d}| / q. Unbiased for C(d).
double head_estimate(const SampleBundle& bundle, std::uint64_t n,
                     std::uint64_t d);

// Tail rule: |{v : d_hat(v) >= d}|; ties count toward the tail.
std::uint64_t tail_estimate(
    const std::unordered_map<VertexId, double>& approx, std::uint64_t d);

// Active-vertex head rule: 2m * |{v accepted : d(v) >= d}| / q', where
// q' counts invocations including rejected ones. Unbiased for C(d).
double head_estimate_active(std::span<const std::uint64_t> accepted_degrees,
                            std::uint64_t m, std::uint64_t q_prime,
                            std::uint64_t d);

enum class EstimateMode { sampled, exact_fallback };

struct CcdhEstimate {
  std::vector<double> values;    // values[i] is the estimate at degree i+1
  std::uint64_t boundary = 0;    // head rule applies for d <= boundary
  EstimateMode mode = EstimateMode::sampled;

  double value_at(std::uint64_t d) const {
    return d >= 1 && d - 1 < values.size() ? values[d - 1] : 0.0;
  }
};

// Bulk evaluation of the head/tail rules over all degrees; equals the per-d
// operations above entry by entry. The tail is histogrammed straight from
// the bundle's endpoint counts (floor(m*count/r) per endpoint).
CcdhEstimate assemble_estimate(const SampleBundle& bundle, std::uint64_t n,
                               std::uint64_t m, std::uint64_t h_prime);
CcdhEstimate assemble_active_estimate(
    std::span<const std::uint64_t> accepted_degrees,
    const SampleBundle& tail_bundle, std::uint64_t m, std::uint64_t q_prime,
    std::uint64_t h_prime);

CcdhEstimate estimate_from_exact(const Ccdh& exact, std::uint64_t h_prime);

// Degree+edge sample provider feeding combine_estimate; realized by the
// in-memory graph here and by the query oracle in the query engine.
class SampleAccess {
 public:
  virtual ~SampleAccess() = default;
  virtual std::vector<std::uint64_t> degree_sample(std::uint64_t q,
                                                   SeededRng& rng) = 0;
  virtual std::vector<Edge> edge_sample(std::uint64_t r, SeededRng& rng) = 0;
  virtual std::vector<std::uint64_t> all_degrees() = 0;  // fallback path
};

class GraphSampleAccess final : public SampleAccess {
 public:
  explicit GraphSampleAccess(const Graph& g) : graph_(g) {}
  std::vector<std::uint64_t> degree_sample(std::uint64_t q,
                                           SeededRng& rng) override;
  std::vector<Edge> edge_sample(std::uint64_t r, SeededRng& rng) override;
  std::vector<std::uint64_t> all_degrees() override;

 private:
  const Graph& graph_;
};

struct CombineOptions {
  // When off, the q >= n / r >= m regimes still run the sampling path
  // (sampling with replacement stays well defined); used to exercise and
  // account for the sampling rules at small scales.
  bool allow_exact_fallback = true;
};

// Head rule for d <= h', tail rule for d > h'; exact ccdh when a fallback
// flag is set and fallback is allowed.
CcdhEstimate combine_estimate(SampleAccess& access, std::uint64_t n,
                              std::uint64_t m, const EstimatorParams& params,
                              const CombineOptions& options = {});

}  // namespace ccdh
