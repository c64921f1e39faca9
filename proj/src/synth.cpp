#include "ccdh/synth.hpp"

#include <cmath>
#include <unordered_set>
#include <vector>

namespace ccdh {

Graph gen_star(std::uint64_t leaves) {
  std::vector<Edge> edges;
  edges.reserve(leaves);
  for (std::uint64_t i = 1; i <= leaves; ++i)
    edges.push_back({0, static_cast<VertexId>(i)});
  return Graph::from_edges(leaves + 1, std::move(edges));
}

Graph gen_path(std::uint64_t vertices) {
  std::vector<Edge> edges;
  if (vertices > 0) edges.reserve(vertices - 1);
  for (std::uint64_t i = 0; i + 1 < vertices; ++i)
    edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1)});
  return Graph::from_edges(vertices, std::move(edges));
}

Graph gen_matching(std::uint64_t pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs);
  for (std::uint64_t i = 0; i < pairs; ++i)
    edges.push_back({static_cast<VertexId>(2 * i),
                     static_cast<VertexId>(2 * i + 1)});
  return Graph::from_edges(2 * pairs, std::move(edges));
}

Graph gen_gnp(std::uint64_t n, double p, SeededRng& rng) {
  if (!(p >= 0 && p <= 1)) throw ParamError("gnp: p must lie in [0,1]");
  std::vector<Edge> edges;
  if (p > 0 && n > 1) {
    double log1mp = std::log1p(-p);
    std::uint64_t u = 0, v = 0;  // v walks the upper triangle row by row
    while (u < n - 1) {
      std::uint64_t skip = 1;
      if (p < 1) {
        double draw = rng.uniform_real();
        double jump = std::floor(std::log1p(-draw) / log1mp);
        skip = jump >= 9.2e18 ? UINT64_MAX : static_cast<std::uint64_t>(jump) + 1;
      }
      // Advance skip positions through rows u of widths n-1-u.
      while (u < n - 1 && skip > n - 1 - v) {
        skip -= n - 1 - v;
        ++u;
        v = u;
      }
      if (u >= n - 1) break;
      v += skip;
      edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_gnm(std::uint64_t n, std::uint64_t m, SeededRng& rng) {
  std::uint64_t total = n < 2 ? 0 : n * (n - 1) / 2;
  if (m > total) throw ParamError("gnm: m exceeds the number of vertex pairs");
  std::unordered_set<Edge, EdgeHash> chosen;
  chosen.reserve(m);
  std::vector<Edge> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    auto u = static_cast<VertexId>(rng.uniform_below(n));
    auto v = static_cast<VertexId>(rng.uniform_below(n));
    if (u == v) continue;
    Edge e = normalized({u, v});
    if (chosen.insert(e).second) edges.push_back(e);
  }
  return Graph::from_edges(n, std::move(edges));
}

Graph gen_chung_lu(std::uint64_t n, const ChungLuOptions& opts,
                   SeededRng& rng) {
  if (!(opts.exponent > 1)) throw ParamError("chung-lu: exponent must be > 1");
  double cap = opts.max_weight > 0 ? opts.max_weight
                                   : std::sqrt(static_cast<double>(n));
  if (n < 2) return Graph::from_edges(n, {});

  const double alpha = -1.0 / (opts.exponent - 1.0);
  std::vector<double> w(n);
  double total = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    w[i] = cap * std::pow(static_cast<double>(i + 1), alpha);
    total += w[i];
  }

  // Weight-sorted skip sampling: weights are non-increasing, so inside a row
  // the pair probability only decreases and each candidate can be thinned
  // against the running bound.
  std::vector<Edge> edges;
  for (std::uint64_t u = 0; u + 1 < n; ++u) {
    std::uint64_t v = u + 1;
    double p = std::min(1.0, w[u] * w[v] / total);
    while (v < n && p > 0) {
      if (p < 1) {
        double draw = rng.uniform_real();
        double jump = std::floor(std::log1p(-draw) / std::log1p(-p));
        if (jump >= 9.2e18) break;
        v += static_cast<std::uint64_t>(jump);
      }
      if (v >= n) break;
      double q = std::min(1.0, w[u] * w[v] / total);
      if (rng.uniform_real() < q / p)
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
      p = q;
      ++v;
    }
  }
  return Graph::from_edges(n, std::move(edges));
}

}  // namespace ccdh
