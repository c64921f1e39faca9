#pragma once

#include <cstdint>

#include "ccdh/graph.hpp"
#include "ccdh/rng.hpp"

namespace ccdh {

Graph gen_star(std::uint64_t leaves);
Graph gen_path(std::uint64_t vertices);
Graph gen_matching(std::uint64_t pairs);

// G(n, p) by geometric skipping over the pair sequence; O(n + m) expected.
Graph gen_gnp(std::uint64_t n, double p, SeededRng& rng);

// Exactly m distinct uniform edges.
Graph gen_gnm(std::uint64_t n, std::uint64_t m, SeededRng& rng);

struct ChungLuOptions {
  double exponent = 2.5;   // degree-distribution power-law exponent
  double max_weight = 0;   // largest expected degree; 0 picks sqrt(n)
};

// Chung-Lu model: weights w_i = max_weight * (i+1)^(-1/(exponent-1)), each
// pair (u,v) joined with probability min(1, w_u*w_v / sum(w)). Generated by
// weight-sorted skip sampling in O(n + m) expected.
Graph gen_chung_lu(std::uint64_t n, const ChungLuOptions& opts, SeededRng& rng);

}  // namespace ccdh
