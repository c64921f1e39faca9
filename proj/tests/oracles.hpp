#pragma once

// Brute-force reference implementations used to cross-check the library.
// Everything here recomputes from first principles and must stay independent
// of the code paths under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "ccdh/graph.hpp"

namespace oracles {

// Degrees by scanning the raw edge array only.
inline std::vector<std::uint64_t> degrees_by_edge_scan(const ccdh::Graph& g) {
  std::vector<std::uint64_t> deg(g.vertex_count(), 0);
  for (const auto& e : g.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

// C(d) by full enumeration per threshold.
inline std::vector<std::uint64_t> ccdh_by_enumeration(const ccdh::Graph& g) {
  auto deg = degrees_by_edge_scan(g);
  std::uint64_t d_max = 0;
  for (auto d : deg) d_max = std::max(d_max, d);
  std::vector<std::uint64_t> c(d_max + 1, 0);
  for (std::uint64_t d = 0; d <= d_max; ++d)
    for (auto dv : deg)
      if (dv >= d) ++c[d];
  return c;
}

// Sort degrees descending; h = max i such that sorted[i-1] >= i (1-based).
inline std::uint64_t h_index_by_sort(const ccdh::Graph& g) {
  auto deg = degrees_by_edge_scan(g);
  std::sort(deg.begin(), deg.end(), std::greater<>());
  std::uint64_t h = 0;
  for (std::uint64_t i = 1; i <= deg.size(); ++i)
    if (deg[i - 1] >= i) h = i;
  return h;
}

inline double z_index_by_enumeration(const ccdh::Graph& g) {
  auto c = ccdh_by_enumeration(g);
  double best = -1;
  for (std::uint64_t d = 1; d < c.size(); ++d) {
    if (c[d] == 0) continue;
    double cand = std::sqrt(double(d) * double(c[d]));
    if (best < 0 || cand < best) best = cand;
  }
  return best;  // -1 when undefined
}

// One-sided 5-sigma binomial band check for an observed count.
inline bool within_5_sigma(double observed, double trials, double p) {
  double mean = trials * p;
  double sigma = std::sqrt(trials * p * (1 - p));
  return std::abs(observed - mean) <= 5.0 * sigma;
}

}  // namespace oracles
