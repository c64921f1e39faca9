// Acceptance checklist. Each criterion prints one PASS/FAIL line; the
// process exits with the number of failed criteria.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ccdh/ccdh.hpp"
#include "ccdh/estimator.hpp"
#include "ccdh/gadgets.hpp"
#include "ccdh/query_engine.hpp"
#include "ccdh/samplers.hpp"
#include "ccdh/stream_engine.hpp"
#include "ccdh/synth.hpp"
#include "oracles.hpp"

using namespace ccdh;

namespace {

double now_s() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

int g_failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("%s criterion %d (%s): %s\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

bool estimate_equals_exact(const CcdhEstimate& est, const Ccdh& exact) {
  if (est.values.size() != exact.d_max()) return false;
  for (std::uint64_t d = 1; d <= exact.d_max(); ++d)
    if (est.values[d - 1] != double(exact.values[d])) return false;
  return true;
}

std::vector<Edge> edges_of(const Graph& g) {
  return {g.edges().begin(), g.edges().end()};
}

// --- criterion 1: exact baselines against brute-force oracles ------------

void criterion_1() {
  double start = now_s();
  SeededRng rng(101);
  int checked = 0;
  std::string why;
  for (int t = 0; t < 200; ++t) {
    std::uint64_t n = 1 + rng.uniform_below(200);
    double p = 0.4 * rng.uniform_real();
    auto g = gen_gnp(n, p, rng);
    auto c = exact_ccdh(g);
    if (c.values != oracles::ccdh_by_enumeration(g)) {
      why = "ccdh mismatch";
      break;
    }
    if (h_index(c) != oracles::h_index_by_sort(g)) {
      why = "h-index mismatch";
      break;
    }
    if (g.edge_count() > 0) {
      double z = z_index(c);
      double zo = oracles::z_index_by_enumeration(g);
      if (std::abs(z - zo) > 1e-9 * std::max(1.0, zo)) {
        why = "z-index mismatch";
        break;
      }
    }
    ++checked;
  }
  double elapsed = now_s() - start;
  bool pass = checked == 200 && elapsed < 10.0;
  std::ostringstream detail;
  detail << checked << "/200 graphs matched oracles in " << elapsed << " s";
  if (!why.empty()) detail << "; first failure: " << why;
  report(1, "exact baselines vs brute force", pass, detail.str());
}

// --- criterion 2: fallback equivalence across engines ---------------------

void criterion_2() {
  SeededRng rng(202);
  int good = 0;
  std::string why;
  for (int t = 0; t < 20; ++t) {
    std::uint64_t n = 2 + rng.uniform_below(50);
    auto g = gen_gnp(n, 0.15 + 0.2 * rng.uniform_real(), rng);
    auto exact = exact_ccdh(g);
    EstimatorParams p{.eps_d = 0.3, .eps_r = 0.3, .c = 1e7,
                      .h_prime = 1 + rng.uniform_below(3),
                      .seed = std::uint64_t(t)};
    auto sizes = sample_sizes(g.vertex_count(), g.edge_count(), p);
    if (!(sizes.q_fallback && sizes.r_fallback)) {
      why = "chosen params did not reach the fallback regime";
      break;
    }

    VectorEdgeStream s1(edges_of(g));
    auto one = onepass_run(s1, g.vertex_count(), g.edge_count(), p);
    VectorEdgeStream s2(edges_of(g));
    auto two = twopass_run(s2, g.vertex_count(), g.edge_count(), p);
    GraphOracle o1(g), o2(g);
    auto na = nonadaptive_query_estimate(o1, g.vertex_count(), g.edge_count(),
                                         p);
    auto ad = adaptive_query_estimate(o2, g.vertex_count(), g.edge_count(), p);

    bool all = estimate_equals_exact(one.estimate, exact) &&
               estimate_equals_exact(two.estimate, exact) &&
               estimate_equals_exact(na.estimate, exact) &&
               estimate_equals_exact(ad.estimate, exact) &&
               one.estimate.mode == EstimateMode::exact_fallback &&
               two.estimate.mode == EstimateMode::exact_fallback &&
               na.estimate.mode == EstimateMode::exact_fallback &&
               ad.estimate.mode == EstimateMode::exact_fallback;
    if (!all) {
      why = "an engine diverged from the exact ccdh";
      break;
    }
    ++good;
  }
  std::ostringstream detail;
  detail << good << "/20 graphs exact across stream1/stream2/query-na/query-ad";
  if (!why.empty()) detail << "; " << why;
  report(2, "fallback equivalence", good == 20, detail.str());
}

// --- criterion 3: sampler statistics at 5 sigma ---------------------------

void criterion_3() {
  bool pass = true;
  std::ostringstream detail;

  {  // reservoir retention, m = 50, 1e5 trials
    const std::uint64_t m = 50, trials = 100000;
    std::vector<std::uint64_t> counts(m, 0);
    SeededRng rng(303);
    for (std::uint64_t t = 0; t < trials; ++t) {
      ReservoirState res;
      for (std::uint64_t i = 0; i < m; ++i)
        res.update({static_cast<VertexId>(i), static_cast<VertexId>(i + m)},
                   rng);
      ++counts[res.held_item->u];
    }
    for (auto c : counts)
      if (!oracles::within_5_sigma(double(c), double(trials), 1.0 / m))
        pass = false;
    detail << "reservoir(m=50) ";
  }
  {  // random edges, m = 10, 1e5 draws
    auto g = gen_matching(10);
    SeededRng rng(304);
    auto sample = random_edges_with_replacement(g, 100000, rng);
    std::array<std::uint64_t, 10> counts{};
    for (const auto& e : sample) ++counts[e.u / 2];
    for (auto c : counts)
      if (!oracles::within_5_sigma(double(c), 100000.0, 0.1)) pass = false;
    detail << "random-edge(m=10) ";
  }
  {  // active vertex sampling on the 4-vertex star, 2e5 trials
    auto g = gen_star(3);
    GraphAccessPort port(g);
    SeededRng rng(305);
    const std::uint64_t trials = 200000;
    std::array<std::uint64_t, 4> counts{};
    std::uint64_t none = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
      if (auto v = active_vertex_sample(port, rng))
        ++counts[v->id];
      else
        ++none;
    }
    for (auto c : counts)
      if (!oracles::within_5_sigma(double(c), double(trials), 1.0 / 6))
        pass = false;
    if (!oracles::within_5_sigma(double(none), double(trials), 1.0 / 3))
      pass = false;
    detail << "active-vertex(star) ";
  }
  report(3, "sampler statistics within 5 sigma", pass, detail.str());
}

// --- criterion 4: unbiasedness on a fixed 30-vertex graph -----------------

void criterion_4() {
  SeededRng graph_rng(2024);
  auto g = gen_gnp(30, 0.2, graph_rng);
  auto exact = exact_ccdh(g);
  const std::uint64_t n = g.vertex_count(), m = g.edge_count();
  const std::uint64_t q = 30, r = 60, q_prime = 60, draws = 10000;
  bool pass = true;
  std::ostringstream detail;

  {  // head_estimate means
    GraphSampleAccess access(g);
    std::vector<double> sums(exact.d_max() + 1, 0.0);
    SeededRng rng(401);
    for (std::uint64_t t = 0; t < draws; ++t) {
      auto bundle =
          SampleBundle::from_samples(access.degree_sample(q, rng), {});
      for (std::uint64_t d = 1; d <= exact.d_max(); ++d)
        sums[d] += head_estimate(bundle, n, d);
    }
    for (std::uint64_t d = 1; d <= exact.d_max(); ++d) {
      double p = double(exact.at(d)) / double(n);
      double sigma_mean = std::sqrt(
          double(n) * double(n) / double(q) * p * (1 - p) / double(draws));
      if (std::abs(sums[d] / double(draws) - double(exact.at(d))) >
          5 * sigma_mean + 1e-12)
        pass = false;
    }
    detail << "head ";
  }
  {  // approximate-degree means
    std::vector<double> sums(n, 0.0);
    SeededRng rng(402);
    for (std::uint64_t t = 0; t < draws; ++t) {
      auto bundle = SampleBundle::from_samples(
          {}, random_edges_with_replacement(g, r, rng));
      for (auto& [v, dv] : approx_degrees(bundle, m)) sums[v] += dv;
    }
    for (VertexId v = 0; v < n; ++v) {
      double dv = double(g.degree(v));
      double p = dv / double(m);
      double sigma_mean = std::sqrt(
          double(m) * double(m) / double(r) * p * (1 - p) / double(draws));
      if (std::abs(sums[v] / double(draws) - dv) > 5 * sigma_mean + 1e-12)
        pass = false;
    }
    detail << "approx-degree ";
  }
  {  // active head means
    GraphAccessPort port(g);
    std::vector<double> sums(exact.d_max() + 1, 0.0);
    SeededRng rng(403);
    for (std::uint64_t t = 0; t < draws; ++t) {
      std::vector<std::uint64_t> degs;
      for (std::uint64_t i = 0; i < q_prime; ++i)
        if (auto v = active_vertex_sample(port, rng)) degs.push_back(v->degree);
      for (std::uint64_t d = 1; d <= exact.d_max(); ++d)
        sums[d] += head_estimate_active(degs, m, q_prime, d);
    }
    for (std::uint64_t d = 1; d <= exact.d_max(); ++d) {
      double p = double(exact.at(d)) / (2.0 * double(m));
      double sigma_mean =
          std::sqrt(4.0 * double(m) * double(m) / double(q_prime) * p *
                    (1 - p) / double(draws));
      if (std::abs(sums[d] / double(draws) - double(exact.at(d))) >
          5 * sigma_mean + 1e-12)
        pass = false;
    }
    detail << "active-head ";
  }
  detail << "within 5 sigma over " << draws << " draws";
  report(4, "estimator unbiasedness", pass, detail.str());
}

// --- criterion 5: BMA pass rates on a power-law graph ---------------------

void criterion_5() {
  double start = now_s();
  SeededRng graph_rng(20250809);
  auto g = gen_chung_lu(100000, {2.5, 7000.0}, graph_rng);
  auto exact = exact_ccdh(g);
  std::uint64_t h = h_index(exact);
  auto edges = edges_of(g);

  auto batch = [&](double c) {
    EstimatorParams p{.eps_d = 0.1, .eps_r = 0.1, .c = c, .h_prime = h,
                      .seed = 0};
    int passes = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      p.seed = seed;
      VectorEdgeStream stream(edges);
      auto result =
          onepass_run(stream, g.vertex_count(), g.edge_count(), p);
      auto verdict = bma_check(exact, result.estimate.values, p.eps_d,
                               p.eps_r);
      if (verdict.pass) ++passes;
    }
    return passes;
  };

  auto sizes_small = sample_sizes(g.vertex_count(), g.edge_count(),
                                  {.eps_d = 0.1, .eps_r = 0.1, .c = 0.01,
                                   .h_prime = h, .seed = 0});
  auto sizes_big = sample_sizes(g.vertex_count(), g.edge_count(),
                                {.eps_d = 0.1, .eps_r = 0.1, .c = 0.1,
                                 .h_prime = h, .seed = 0});

  double t1 = now_s();
  int pass_small = batch(0.01);
  double batch1_s = now_s() - t1;
  double t2 = now_s();
  int pass_big = batch(0.1);
  double batch2_s = now_s() - t2;

  bool pass = pass_small >= 80 && pass_big >= 95 && batch1_s < 120 &&
              batch2_s < 120;
  std::ostringstream detail;
  detail << "chung-lu n=1e5 exp=2.5 m=" << g.edge_count() << " h=" << h
         << " | c=0.01: " << pass_small << "/100 (bar 80, sampled="
         << (!sizes_small.q_fallback && !sizes_small.r_fallback) << ", "
         << batch1_s << " s)"
         << " | c=0.1: " << pass_big << "/100 (bar 95, sampled="
         << (!sizes_big.q_fallback && !sizes_big.r_fallback) << ", "
         << batch2_s << " s), total " << (now_s() - start) << " s";
  report(5, "one-pass BMA success rate", pass, detail.str());
}

// --- criterion 6: query accounting ----------------------------------------

void criterion_6() {
  SeededRng gr(606);
  auto g1 = gen_gnm(100, 200, gr);
  auto g2 = gen_gnm(100, 200, gr);
  EstimatorParams p{.eps_d = 0.5, .eps_r = 0.5, .c = 1.0, .h_prime = 5,
                    .seed = 33};
  QueryEngineOptions sampling{.allow_exact_fallback = false};
  bool pass = true;
  std::ostringstream detail;

  {  // non-adaptive counts: exactly q=369 Degree + r=737 RandomEdge
    GraphOracle oracle(g1);
    auto result = nonadaptive_query_estimate(oracle, 100, 200, p, sampling);
    bool ok = result.log == QueryLog{369, 0, 0, 737};
    if (!ok) pass = false;
    detail << "na={deg:" << result.log.degree
           << ",re:" << result.log.random_edge << "} ";
  }
  {  // adaptive counts: q' RandomEdge + q' Degree + r RandomEdge = 2q' + r
    GraphOracle oracle(g1);
    auto result = adaptive_query_estimate(oracle, 100, 200, p, sampling);
    std::uint64_t q_prime = active_vertex_invocations(100, 200, p);
    bool ok = result.log.degree == q_prime &&
              result.log.random_edge == q_prime + result.r &&
              result.log.total() == 2 * q_prime + result.r;
    if (!ok) pass = false;
    detail << "ad-total=" << result.log.total() << " (2q'+r="
           << 2 * q_prime + result.r << ") ";
  }
  {  // transcript is graph independent
    GraphOracle o1(g1), o2(g2);
    o1.enable_transcript();
    o2.enable_transcript();
    nonadaptive_query_estimate(o1, 100, 200, p, sampling);
    nonadaptive_query_estimate(o2, 100, 200, p, sampling);
    if (!(o1.transcript() == o2.transcript())) pass = false;
    detail << "transcripts-equal="
           << (o1.transcript() == o2.transcript());
  }
  report(6, "query accounting, zero tolerance", pass, detail.str());
}

// --- criterion 7: gadget closed forms --------------------------------------

void criterion_7() {
  SeededRng rng(707);
  bool pass = true;
  std::string why;

  for (int t = 0; t < 50 && pass; ++t) {
    bool intersecting = t % 2 == 0;
    auto inst =
        gen_disjointness_instance(1 + rng.uniform_below(60), intersecting, rng);
    auto g = gen_general_gadget(inst);
    if (exact_ccdh(g).at(2) != (intersecting ? 1u : 0u)) {
      pass = false;
      why = "general gadget C(2)";
    }
  }

  const std::array<std::uint64_t, 3> hs{4, 8, 16};
  int done = 0;
  for (int t = 0; t < 50 && pass; ++t) {
    std::uint64_t h = hs[rng.uniform_below(3)];
    std::uint64_t M = rng.coin() ? h : 4 * h;
    bool intersecting = rng.coin();
    auto inst = gen_disjointness_instance(M, intersecting, rng);
    auto g = gen_hindex_gadget(inst, h, 5 * M);
    auto c = exact_ccdh(g);
    if (h_index(c) != h) {
      pass = false;
      why = "hindex gadget h-index";
      break;
    }
    if (c.at(6 * h / 4) != (intersecting ? 1u : 0u)) {
      pass = false;
      why = "hindex gadget C(6h/4)";
      break;
    }
    for (std::uint64_t i = 0; i < M; ++i) {
      if (g.degree(static_cast<VertexId>(M + i)) != h ||
          g.degree(static_cast<VertexId>(2 * M + i)) != h) {
        pass = false;
        why = "B/C degree";
        break;
      }
    }
    ++done;
  }
  std::ostringstream detail;
  detail << "50 general + " << done << " hindex instances, exact equality";
  if (!why.empty()) detail << "; failed: " << why;
  report(7, "gadget structure", pass, detail.str());
}

// --- criterion 8: sparse-graph advantage -----------------------------------

void criterion_8() {
  // n = 1e5 vertices, m = 5e3 edges as a matching; isolated majority
  std::vector<Edge> edges;
  for (std::uint64_t i = 0; i < 5000; ++i)
    edges.push_back({static_cast<VertexId>(2 * i),
                     static_cast<VertexId>(2 * i + 1)});
  auto g = Graph::from_edges(100000, std::move(edges));
  std::uint64_t h = h_index(exact_ccdh(g));
  EstimatorParams p{.eps_d = 0.1, .eps_r = 0.1, .c = 0.01, .h_prime = h,
                    .seed = 1};
  auto sizes = sample_sizes(g.vertex_count(), g.edge_count(), p);
  std::uint64_t q_prime =
      active_vertex_invocations(g.vertex_count(), g.edge_count(), p);
  std::uint64_t adaptive_total = 2 * q_prime + sizes.r;
  std::uint64_t nonadaptive_total = sizes.q + sizes.r;
  bool pass = adaptive_total < nonadaptive_total;
  std::ostringstream detail;
  detail << "h=" << h << " 2q'+r=" << adaptive_total
         << " < q+r=" << nonadaptive_total;
  report(8, "sparse-graph advantage", pass, detail.str());
}

// --- criterion 9: sample-ratio identity ------------------------------------

void criterion_9() {
  SeededRng rng(909);
  bool pass = true;
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    std::uint64_t n = 10 + rng.uniform_below(1000000);
    std::uint64_t m = 1 + rng.uniform_below(5000000);
    double eps = 0.05 + 0.9 * rng.uniform_real();
    EstimatorParams p{.eps_d = eps, .eps_r = eps,
                      .c = 0.001 + 0.2 * rng.uniform_real(),
                      .h_prime = 1 + rng.uniform_below(1000), .seed = 1};
    auto s = sample_sizes(n, m, p);
    double qn = double(s.q) / double(n);
    double rm = double(s.r) / double(m);
    if (std::abs(qn - rm) > 1.0 / double(n) + 1.0 / double(m)) {
      pass = false;
      break;
    }
    ++checked;
  }
  std::ostringstream detail;
  detail << checked << "/200 parameter settings: |q/n - r/m| within ceiling "
            "rounding";
  report(9, "sample-ratio identity", pass, detail.str());
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures;
}
