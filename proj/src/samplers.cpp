#include "ccdh/samplers.hpp"

#include <cmath>

namespace ccdh {

std::vector<VertexId> uniform_vertex_sample(std::uint64_t n, std::uint64_t q,
                                            SeededRng& rng) {
  if (n == 0 && q > 0)
    throw ParamError("uniform_vertex_sample: n = 0 with q > 0");
  std::vector<VertexId> sample(q);
  for (auto& v : sample) v = static_cast<VertexId>(rng.uniform_below(n));
  return sample;
}

std::vector<Edge> random_edges_with_replacement(const Graph& g, std::uint64_t r,
                                                SeededRng& rng) {
  if (g.edge_count() == 0 && r > 0)
    throw ParamError("random_edges_with_replacement: m = 0 with r > 0");
  std::vector<Edge> sample(r);
  for (auto& e : sample) e = g.edges()[rng.uniform_below(g.edge_count())];
  return sample;
}

ReservoirBank::ReservoirBank(std::uint64_t count, const SeededRng& base,
                             std::uint64_t domain) {
  std::uint64_t wheel = 16;
  while (wheel < 4 * count && wheel < (1u << 20)) wheel <<= 1;
  mask_ = wheel - 1;
  bucket_head_.assign(wheel, kNil);
  next_in_bucket_.assign(count, kNil);
  fire_pos_.assign(count, 1);  // first item always accepted
  slots_.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    slots_.push_back({std::nullopt, base.split(domain, i)});
    park(static_cast<std::uint32_t>(i));
  }
}

std::uint64_t ReservoirBank::next_accept_after(std::uint64_t t,
                                               SeededRng& rng) {
  // P[next > s] = t/s for s >= t; sample ceil(t/u) with u in (0,1].
  double u = 1.0 - rng.uniform_real();
  double next = std::ceil(static_cast<double>(t) / u);
  if (!(next < 9.2e18)) return UINT64_MAX;
  auto s = static_cast<std::uint64_t>(next);
  return s > t ? s : t + 1;
}

void ReservoirBank::park(std::uint32_t slot) {
  std::uint64_t b = fire_pos_[slot] & mask_;
  next_in_bucket_[slot] = bucket_head_[b];
  bucket_head_[b] = slot;
}

void ReservoirBank::offer(const Edge& e) {
  ++position_;
  std::uint32_t* link = &bucket_head_[position_ & mask_];
  while (*link != kNil) {
    std::uint32_t i = *link;
    if (fire_pos_[i] == position_) {
      *link = next_in_bucket_[i];  // unlink; a reschedule lands ahead of us
      slots_[i].held = e;
      fire_pos_[i] = next_accept_after(position_, slots_[i].rng);
      if (fire_pos_[i] != UINT64_MAX) park(i);
    } else {
      link = &next_in_bucket_[i];  // parked for a later lap of the wheel
    }
  }
}

std::optional<ActiveVertex> active_vertex_sample(AccessPort& port,
                                                 SeededRng& rng) {
  Edge e = port.random_edge(rng);
  VertexId v = rng.coin() ? e.v : e.u;
  std::uint64_t d = port.degree(v);
  // d >= 1: v is an endpoint of an existing edge.
  if (rng.uniform_below(d) == 0) return ActiveVertex{v, d};
  return std::nullopt;
}

}  // namespace ccdh
