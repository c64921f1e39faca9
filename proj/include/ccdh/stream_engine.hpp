#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "ccdh/estimator.hpp"
#include "ccdh/types.hpp"

namespace ccdh {

// Insertion-only edge stream in arbitrary (possibly adversarial) order, with
// the total length declared up front. Each graph edge appears exactly once.
class EdgeStream {
 public:
  virtual ~EdgeStream() = default;
  virtual std::uint64_t declared_edges() const = 0;
  virtual std::optional<Edge> next() = 0;
  virtual void reset() = 0;  // rewind for a second pass
};

class VectorEdgeStream final : public EdgeStream {
 public:
  explicit VectorEdgeStream(std::vector<Edge> edges)
      : edges_(std::move(edges)), declared_(edges_.size()) {}
  VectorEdgeStream(std::vector<Edge> edges, std::uint64_t declared)
      : edges_(std::move(edges)), declared_(declared) {}

  std::uint64_t declared_edges() const override { return declared_; }
  std::optional<Edge> next() override {
    if (pos_ >= edges_.size()) return std::nullopt;
    return edges_[pos_++];
  }
  void reset() override { pos_ = 0; }

 private:
  std::vector<Edge> edges_;
  std::uint64_t declared_;
  std::size_t pos_ = 0;
};

// Streams an edge-list file line by line without buffering it; reset()
// re-opens the file for the second pass.
class FileEdgeStream final : public EdgeStream {
 public:
  FileEdgeStream(std::string path, std::uint64_t declared);

  std::uint64_t declared_edges() const override { return declared_; }
  std::optional<Edge> next() override;
  void reset() override;

 private:
  std::string path_;
  std::uint64_t declared_;
  std::ifstream in_;
  std::uint64_t line_no_ = 0;
};

// Retained vertex-id cells (watched slots, reservoir edge endpoints, chosen
// endpoints); degree counters ride along with their slots.
struct SpaceReport {
  std::uint64_t slots_peak = 0;
  std::uint64_t slots_bound = 0;
};

struct EngineOptions {
  bool allow_exact_fallback = true;
};

struct OnePassResult {
  CcdhEstimate estimate;
  SampleSizes sizes;
  SpaceReport space;
  SampleBundle bundle;  // realized samples (empty in the fallback regime)
};

// One-pass engine: q watched vertices with exact degree counters plus r
// size-1 reservoirs; head/tail assembly as in combine_estimate. Space
// bound q + r slots (n in the exact-fallback regime).
OnePassResult onepass_run(EdgeStream& stream, std::uint64_t n, std::uint64_t m,
                          const EstimatorParams& params,
                          const EngineOptions& options = {});

struct TwoPassResult {
  CcdhEstimate estimate;
  std::uint64_t q_prime = 0;
  std::uint64_t r = 0;
  bool q_fallback = false;  // q' >= n
  bool r_fallback = false;  // r >= m
  SpaceReport space;
};

// Two-pass active-vertex engine: pass 1 fills q' candidate reservoirs and r
// tail reservoirs; one endpoint per candidate is fixed before pass 2, which
// counts those endpoints' degrees; each candidate is then accepted with
// probability 1/degree. Head via the 2m/q' rule, tail via approximate
// degrees. Space bound 2(q' + r) + q' slots.
TwoPassResult twopass_run(EdgeStream& stream, std::uint64_t n, std::uint64_t m,
                          const EstimatorParams& params,
                          const EngineOptions& options = {});

}  // namespace ccdh
