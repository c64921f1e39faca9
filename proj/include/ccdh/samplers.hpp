#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ccdh/graph.hpp"
#include "ccdh/rng.hpp"
#include "ccdh/types.hpp"

namespace ccdh {

// q independent draws, each uniform over 0..n-1 (with replacement).
std::vector<VertexId> uniform_vertex_sample(std::uint64_t n, std::uint64_t q,
                                            SeededRng& rng);

// r independent uniform draws from the edge array (with replacement).
std::vector<Edge> random_edges_with_replacement(const Graph& g, std::uint64_t r,
                                                SeededRng& rng);

// Size-1 reservoir: after a stream of m updates, held_item is uniform over
// the m items. Classic rule: the t-th item replaces with probability 1/t.
struct ReservoirState {
  std::optional<Edge> held_item;
  std::uint64_t items_seen = 0;

  void update(const Edge& e, SeededRng& rng) {
    ++items_seen;
    if (items_seen == 1 || rng.uniform_below(items_seen) == 0) held_item = e;
  }
};

// r independent size-1 reservoirs over one shared stream. Replacement
// positions are drawn by inverse-CDF skips (P[next accept > s | last at t]
// = t/s, exactly the distribution the 1/t rule induces), so a full pass
// costs O(m + r log m) instead of O(m r). Each reservoir owns an
// independent sub-stream of the given rng. Pending replacements sit on a
// timer wheel keyed by stream position: one event per reservoir, O(1) to
// fire and reschedule.
class ReservoirBank {
 public:
  ReservoirBank(std::uint64_t count, const SeededRng& base,
                std::uint64_t domain);

  void offer(const Edge& e);

  std::uint64_t size() const { return slots_.size(); }
  std::uint64_t items_seen() const { return position_; }
  const std::optional<Edge>& held(std::uint64_t i) const {
    return slots_[i].held;
  }

 private:
  struct Slot {
    std::optional<Edge> held;
    SeededRng rng;
  };
  static constexpr std::uint32_t kNil = UINT32_MAX;

  std::uint64_t next_accept_after(std::uint64_t t, SeededRng& rng);
  void park(std::uint32_t slot);

  std::vector<Slot> slots_;
  std::vector<std::uint64_t> fire_pos_;       // next accept per reservoir
  std::vector<std::uint32_t> bucket_head_;    // wheel: position & mask
  std::vector<std::uint32_t> next_in_bucket_;
  std::uint64_t mask_ = 0;
  std::uint64_t position_ = 0;
};

// Capability bundle for Active Vertex Sampling: a uniform random edge draw
// plus degree lookup, so the same procedure runs over the in-memory graph
// and the query oracle.
class AccessPort {
 public:
  virtual ~AccessPort() = default;
  virtual Edge random_edge(SeededRng& rng) = 0;
  virtual std::uint64_t degree(VertexId v) = 0;
};

class GraphAccessPort final : public AccessPort {
 public:
  explicit GraphAccessPort(const Graph& g) : graph_(g) {}
  Edge random_edge(SeededRng& rng) override {
    if (graph_.edge_count() == 0)
      throw ParamError("random_edge on an edgeless graph");
    return graph_.edges()[rng.uniform_below(graph_.edge_count())];
  }
  std::uint64_t degree(VertexId v) override { return graph_.degree(v); }

 private:
  const Graph& graph_;
};

struct ActiveVertex {
  VertexId id;
  std::uint64_t degree;  // observed during the draw
};

// One invocation of Active Vertex Sampling: uniform edge, uniform endpoint v,
// accept with probability 1/degree(v). Returns each active vertex with
// probability 1/2m and nothing with probability 1 - n_a/2m.
std::optional<ActiveVertex> active_vertex_sample(AccessPort& port,
                                                 SeededRng& rng);

}  // namespace ccdh
