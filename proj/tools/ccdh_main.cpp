// Command-line front end: exact baselines, sampling estimators over edge
// streams or a query oracle, BMA verification, adversarial gadget and
// synthetic graph generation, and repeated-trial benchmarking.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ccdh/ccdh.hpp"
#include "ccdh/estimator.hpp"
#include "ccdh/gadgets.hpp"
#include "ccdh/graph.hpp"
#include "ccdh/query_engine.hpp"
#include "ccdh/stream_engine.hpp"
#include "ccdh/synth.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitBmaFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch())
      .count();
}

struct TimedPhase {
  double& slot;
  double start = now_ms();
  explicit TimedPhase(double& s) : slot(s) {}
  ~TimedPhase() { slot = now_ms() - start; }
};

void write_text(const std::string& path, const std::string& text,
                std::ostream& fallback) {
  if (path.empty() || path == "-") {
    fallback << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ccdh::ParseError("cannot open '" + path + "' for writing");
  out << text;
}

void print_ingest_summary(const ccdh::IngestSummary& sum) {
  std::cerr << "lines_read=" << sum.lines_read
            << " edges_kept=" << sum.edges_kept
            << " self_loops_dropped=" << sum.self_loops_dropped
            << " duplicates_dropped=" << sum.duplicates_dropped << "\n";
}

json graph_stats_json(const ccdh::Graph& g, const ccdh::Ccdh& exact) {
  json stats{{"n", g.vertex_count()},
             {"m", g.edge_count()},
             {"n_a", ccdh::active_vertex_count(g)},
             {"h", ccdh::h_index(exact)}};
  if (g.edge_count() > 0)
    stats["z"] = ccdh::z_index(exact);
  else
    stats["z"] = nullptr;
  return stats;
}

json bma_summary_json(const ccdh::BmaVerdict& verdict) {
  json out{{"pass", verdict.pass},
           {"violations", verdict.violations.size()}};
  if (!verdict.pass) {
    const auto* worst = &verdict.violations.front();
    double worst_breach = 0;
    for (const auto& v : verdict.violations) {
      double breach = std::max(v.lower - v.estimate, v.estimate - v.upper);
      if (breach > worst_breach) {
        worst_breach = breach;
        worst = &v;
      }
    }
    out["worst"] = {{"d", worst->d},
                    {"estimate", worst->estimate},
                    {"lower", worst->lower},
                    {"upper", worst->upper}};
  }
  return out;
}

struct EstimateFlags {
  std::string model;
  double eps_d = 0.1;
  double eps_r = 0.1;
  double c = 0.01;
  std::string h_prime = "auto";
  std::uint64_t seed = 1;
  bool no_fallback = false;
};

std::uint64_t parse_u64_strict(const std::string& text,
                               const std::string& what) {
  std::uint64_t value = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ccdh::ParamError(what + ": expected a non-negative integer, got '" +
                           text + "'");
  return value;
}

ccdh::EstimatorParams resolve_params(const EstimateFlags& flags,
                                     std::uint64_t exact_h) {
  ccdh::EstimatorParams params;
  params.eps_d = flags.eps_d;
  params.eps_r = flags.eps_r;
  params.c = flags.c;
  params.seed = flags.seed;
  if (flags.h_prime == "auto") {
    params.h_prime = std::max<std::uint64_t>(1, exact_h);
  } else {
    params.h_prime = parse_u64_strict(flags.h_prime, "--h-prime");
  }
  params.validate();
  return params;
}

struct EngineOutcome {
  ccdh::CcdhEstimate estimate;
  json samples;
  std::optional<ccdh::QueryLog> query_log;
};

EngineOutcome run_model(const std::string& model, const ccdh::Graph& g,
                        const std::string& input_path, bool stream_from_file,
                        const ccdh::EstimatorParams& params,
                        bool allow_fallback) {
  const std::uint64_t n = g.vertex_count(), m = g.edge_count();
  EngineOutcome out;

  auto make_stream = [&]() -> std::unique_ptr<ccdh::EdgeStream> {
    if (stream_from_file)
      return std::make_unique<ccdh::FileEdgeStream>(input_path, m);
    return std::make_unique<ccdh::VectorEdgeStream>(
        std::vector<ccdh::Edge>(g.edges().begin(), g.edges().end()));
  };

  if (model == "stream1") {
    auto stream = make_stream();
    auto result = ccdh::onepass_run(*stream, n, m, params,
                                    {.allow_exact_fallback = allow_fallback});
    out.estimate = std::move(result.estimate);
    out.samples = {{"q", result.sizes.q},
                   {"r", result.sizes.r},
                   {"fallback_q", result.sizes.q_fallback},
                   {"fallback_r", result.sizes.r_fallback},
                   {"ratio_q_n", double(result.sizes.q) / double(n)},
                   {"ratio_r_m",
                    m > 0 ? json(double(result.sizes.r) / double(m)) : json()},
                   {"space_slots", result.space.slots_peak}};
  } else if (model == "stream2") {
    auto stream = make_stream();
    auto result = ccdh::twopass_run(*stream, n, m, params,
                                    {.allow_exact_fallback = allow_fallback});
    out.estimate = std::move(result.estimate);
    out.samples = {{"q_prime", result.q_prime},
                   {"r", result.r},
                   {"fallback_q", result.q_fallback},
                   {"fallback_r", result.r_fallback},
                   {"ratio_r_m",
                    m > 0 ? json(double(result.r) / double(m)) : json()},
                   {"space_slots", result.space.slots_peak}};
  } else if (model == "query-na") {
    ccdh::GraphOracle oracle(g);
    auto result = ccdh::nonadaptive_query_estimate(
        oracle, n, m, params, {.allow_exact_fallback = allow_fallback});
    out.estimate = std::move(result.estimate);
    out.query_log = result.log;
    out.samples = {{"q", result.sizes.q},
                   {"r", result.sizes.r},
                   {"fallback_q", result.sizes.q_fallback},
                   {"fallback_r", result.sizes.r_fallback},
                   {"ratio_q_n", double(result.sizes.q) / double(n)},
                   {"ratio_r_m",
                    m > 0 ? json(double(result.sizes.r) / double(m)) : json()}};
  } else if (model == "query-ad") {
    ccdh::GraphOracle oracle(g);
    auto result = ccdh::adaptive_query_estimate(
        oracle, n, m, params, {.allow_exact_fallback = allow_fallback});
    out.estimate = std::move(result.estimate);
    out.query_log = result.log;
    out.samples = {{"q_prime", result.q_prime},
                   {"r", result.r},
                   {"fallback_q", result.q_fallback},
                   {"fallback_r", result.r_fallback},
                   {"ratio_r_m",
                    m > 0 ? json(double(result.r) / double(m)) : json()}};
  } else {
    throw ccdh::ParamError("unknown model '" + model + "'");
  }
  out.samples["mode"] = out.estimate.mode == ccdh::EstimateMode::exact_fallback
                            ? "exact-fallback"
                            : "sampled";
  return out;
}

json query_log_json(const ccdh::QueryLog& log) {
  return {{"degree", log.degree},
          {"neighbor", log.neighbor},
          {"edge_exist", log.edge_exist},
          {"random_edge", log.random_edge}};
}

int cmd_exact(const std::string& input, const std::string& out_csv,
              const std::string& out_json, const ccdh::IngestOptions& opts) {
  ccdh::IngestSummary sum;
  auto g = ccdh::load_edge_list_file(input, opts, &sum);
  print_ingest_summary(sum);
  auto exact = ccdh::exact_ccdh(g);

  std::ostringstream csv;
  ccdh::write_ccdh_csv(csv, exact);
  write_text(out_csv, csv.str(), std::cout);

  json stats = graph_stats_json(g, exact);
  stats["schema"] = 1;
  write_text(out_json, stats.dump(2) + "\n", std::cerr);
  return kExitPass;
}

int cmd_estimate(const std::string& input, const EstimateFlags& flags,
                 const std::string& out_csv, const std::string& out_json,
                 const ccdh::IngestOptions& opts) {
  double ingest_ms = 0;
  ccdh::IngestSummary sum;
  ccdh::Graph g = [&] {
    TimedPhase t(ingest_ms);
    return ccdh::load_edge_list_file(input, opts, &sum);
  }();
  print_ingest_summary(sum);
  auto exact = ccdh::exact_ccdh(g);
  auto params = resolve_params(flags, ccdh::h_index(exact));

  // A cleaned input can be streamed straight from disk; otherwise stream the
  // deduplicated edge set so the declared length matches.
  bool from_file =
      sum.self_loops_dropped == 0 && sum.duplicates_dropped == 0;
  if (!from_file)
    std::cerr << "note=input contained dropped lines; streaming cleaned edges\n";

  double est_ms = 0;
  EngineOutcome outcome;
  {
    TimedPhase t(est_ms);
    outcome = run_model(flags.model, g, input, from_file, params,
                        !flags.no_fallback);
  }

  double verify_ms = 0;
  ccdh::BmaVerdict verdict;
  {
    TimedPhase t(verify_ms);
    verdict = ccdh::bma_check(exact, outcome.estimate.values, params.eps_d,
                              params.eps_r);
  }

  std::ostringstream csv;
  ccdh::write_estimate_csv(csv, outcome.estimate.values);
  write_text(out_csv, csv.str(), std::cout);

  json report{{"schema", 1},
              {"graph_stats", graph_stats_json(g, exact)},
              {"params",
               {{"eps_d", params.eps_d},
                {"eps_r", params.eps_r},
                {"c", params.c},
                {"h_prime", params.h_prime},
                {"seed", params.seed},
                {"model", flags.model}}},
              {"samples", outcome.samples},
              {"bma", bma_summary_json(verdict)},
              {"timing_ms",
               {{"ingest", ingest_ms},
                {"estimate", est_ms},
                {"verify", verify_ms}}}};
  if (outcome.query_log) report["query_log"] = query_log_json(*outcome.query_log);
  write_text(out_json, report.dump(2) + "\n", std::cerr);
  return kExitPass;
}

int cmd_verify_bma(const std::string& exact_path,
                   const std::string& estimate_path, double eps_d,
                   double eps_r, const std::string& out_json) {
  std::ifstream exact_in(exact_path);
  if (!exact_in) throw ccdh::ParseError("cannot open '" + exact_path + "'");
  auto exact = ccdh::read_ccdh_csv(exact_in);

  std::ifstream est_in(estimate_path);
  if (!est_in) throw ccdh::ParseError("cannot open '" + estimate_path + "'");
  auto est = ccdh::read_estimate_csv(est_in);

  auto verdict = ccdh::bma_check(
      exact,
      [&est](std::uint64_t d) {
        auto it = est.find(d);
        return it == est.end() ? 0.0 : it->second;
      },
      eps_d, eps_r);

  json out = bma_summary_json(verdict);
  out["schema"] = 1;
  json violations = json::array();
  std::size_t limit = std::min<std::size_t>(verdict.violations.size(), 100);
  for (std::size_t i = 0; i < limit; ++i) {
    const auto& v = verdict.violations[i];
    violations.push_back({{"d", v.d},
                          {"estimate", v.estimate},
                          {"lower", v.lower},
                          {"upper", v.upper}});
  }
  out["violation_list"] = violations;
  write_text(out_json, out.dump(2) + "\n", std::cout);
  return verdict.pass ? kExitPass : kExitBmaFail;
}

int cmd_gadget(const std::string& kind, std::uint64_t M, std::uint64_t h,
               bool intersecting, std::uint64_t n_total, std::uint64_t seed,
               const std::string& out_path) {
  ccdh::SeededRng rng(seed);
  auto inst = ccdh::gen_disjointness_instance(M, intersecting, rng);

  ccdh::GadgetSpec spec;
  spec.M = M;
  ccdh::Graph g = [&] {
    if (kind == "general") {
      spec.kind = ccdh::GadgetSpec::Kind::general;
      return ccdh::gen_general_gadget(inst);
    }
    spec.kind = ccdh::GadgetSpec::Kind::hindex;
    spec.h = h;
    spec.n_total = n_total == 0 ? 5 * M : n_total;
    return ccdh::gen_hindex_gadget(inst, h, spec.n_total);
  }();

  auto verdict = ccdh::validate_gadget(g, spec, inst);
  if (!verdict.ok) {
    std::cerr << "gadget validation failed: " << verdict.failure << "\n";
    return 1;
  }
  ccdh::write_edge_list_file(out_path, g);

  auto bits = [](const std::vector<std::uint8_t>& b) {
    std::string s(b.size(), '0');
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i]) s[i] = '1';
    return s;
  };
  json sidecar{{"schema", 1},
               {"kind", kind},
               {"M", M},
               {"intersecting", intersecting},
               {"seed", seed},
               {"x", bits(inst.x)},
               {"y", bits(inst.y)}};
  if (kind == "hindex") {
    sidecar["h"] = h;
    sidecar["n_total"] = spec.n_total;
  }
  std::ofstream side(out_path + ".json");
  if (!side)
    throw ccdh::ParseError("cannot open '" + out_path + ".json' for writing");
  side << sidecar.dump(2) << "\n";
  return kExitPass;
}

// Relabels sparse ids to dense 0..n-1 (ascending original order), writing
// the rewritten edge list plus an "original new" mapping file. Ids here may
// exceed the in-memory vertex range, so lines are parsed directly.
int cmd_compact(const std::string& input, const std::string& out_path,
                const std::string& map_path) {
  std::ifstream in(input);
  if (!in) throw ccdh::ParseError("cannot open '" + input + "'");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  std::string line;
  std::uint64_t line_no = 0, self_loops = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    std::string second, extra;
    if (!(ls >> second) || (ls >> extra))
      throw ccdh::ParseError("line " + std::to_string(line_no) +
                             ": expected two fields");
    std::uint64_t a, b;
    try {
      std::string where = "line " + std::to_string(line_no);
      a = parse_u64_strict(first, where);
      b = parse_u64_strict(second, where);
    } catch (const ccdh::ParamError& e) {
      throw ccdh::ParseError(e.what());
    }
    if (a == b) {
      ++self_loops;
      continue;
    }
    pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(pairs.begin(), pairs.end());
  auto dup_begin = std::unique(pairs.begin(), pairs.end());
  std::uint64_t dups = std::uint64_t(pairs.end() - dup_begin);
  pairs.erase(dup_begin, pairs.end());

  std::vector<std::uint64_t> ids;
  ids.reserve(2 * pairs.size());
  for (auto& [a, b] : pairs) {
    ids.push_back(a);
    ids.push_back(b);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto dense = [&](std::uint64_t id) {
    return std::uint64_t(std::lower_bound(ids.begin(), ids.end(), id) -
                         ids.begin());
  };

  std::ofstream out(out_path);
  if (!out)
    throw ccdh::ParseError("cannot open '" + out_path + "' for writing");
  for (auto& [a, b] : pairs) out << dense(a) << ' ' << dense(b) << '\n';
  std::ofstream map_out(map_path);
  if (!map_out)
    throw ccdh::ParseError("cannot open '" + map_path + "' for writing");
  for (std::uint64_t i = 0; i < ids.size(); ++i)
    map_out << ids[i] << ' ' << i << '\n';
  std::cerr << "vertices=" << ids.size() << " edges=" << pairs.size()
            << " self_loops_dropped=" << self_loops
            << " duplicates_dropped=" << dups << "\n";
  return kExitPass;
}

int cmd_synth(const std::string& model, std::uint64_t n, double p,
              double exponent, double max_weight, std::uint64_t leaves,
              std::uint64_t length, std::uint64_t pairs, std::uint64_t seed,
              const std::string& out_path) {
  ccdh::SeededRng rng(seed);
  ccdh::Graph g = [&] {
    if (model == "gnp") return ccdh::gen_gnp(n, p, rng);
    if (model == "chung-lu")
      return ccdh::gen_chung_lu(n, {exponent, max_weight}, rng);
    if (model == "star") return ccdh::gen_star(leaves);
    if (model == "path") return ccdh::gen_path(length);
    if (model == "matching") return ccdh::gen_matching(pairs);
    throw ccdh::ParamError("unknown synth model '" + model + "'");
  }();
  ccdh::write_edge_list_file(out_path, g);
  std::cerr << "n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
  return kExitPass;
}

int cmd_bench(const std::string& input, const EstimateFlags& flags,
              std::uint64_t trials, std::uint64_t seed_base,
              const std::string& out_json, const ccdh::IngestOptions& opts) {
  ccdh::IngestSummary sum;
  auto g = ccdh::load_edge_list_file(input, opts, &sum);
  print_ingest_summary(sum);
  auto exact = ccdh::exact_ccdh(g);
  auto params = resolve_params(flags, ccdh::h_index(exact));

  std::uint64_t passes = 0, failures = 0;
  double viol_sum = 0, viol_max = 0;
  std::vector<double> times;
  json per_trial = json::array();
  for (std::uint64_t t = 0; t < trials; ++t) {
    params.seed = seed_base + t;
    double ms = 0;
    try {
      EngineOutcome outcome;
      {
        TimedPhase timer(ms);
        outcome = run_model(flags.model, g, input, false, params,
                            !flags.no_fallback);
      }
      auto verdict = ccdh::bma_check(exact, outcome.estimate.values,
                                     params.eps_d, params.eps_r);
      if (verdict.pass) ++passes;
      viol_sum += double(verdict.violations.size());
      viol_max = std::max(viol_max, double(verdict.violations.size()));
      times.push_back(ms);
      per_trial.push_back({{"seed", params.seed},
                           {"pass", verdict.pass},
                           {"violations", verdict.violations.size()},
                           {"ms", ms}});
    } catch (const std::exception& e) {
      ++failures;
      per_trial.push_back({{"seed", params.seed}, {"error", e.what()}});
    }
  }

  std::sort(times.begin(), times.end());
  auto pct = [&](double q) {
    if (times.empty()) return 0.0;
    return times[std::min(times.size() - 1,
                          std::size_t(q * double(times.size())))];
  };
  json out{{"schema", 1},
           {"trials", trials},
           {"errors", failures},
           {"pass_rate", trials > 0 ? double(passes) / double(trials) : 0.0},
           {"violations",
            {{"mean", trials > 0 ? viol_sum / double(trials) : 0.0},
             {"max", viol_max}}},
           {"timing_ms",
            {{"p50", pct(0.5)}, {"p90", pct(0.9)}, {"max", pct(1.0)}}},
           {"per_trial", per_trial}};
  write_text(out_json, out.dump(2) + "\n", std::cout);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ccdh: degree-histogram estimation by vertex and edge sampling"};
  app.require_subcommand(1);

  std::string input, out_csv = "-", out_json = "-";
  ccdh::IngestOptions ingest;
  std::uint64_t n_override = 0;
  bool keep_self_loops = false, no_dedupe = false;
  EstimateFlags flags;

  auto add_ingest_flags = [&](CLI::App* cmd) {
    cmd->add_option("--n", n_override, "declared vertex count override");
    cmd->add_flag("--keep-self-loops", keep_self_loops,
                  "reject instead of dropping self-loops");
    cmd->add_flag("--no-dedupe", no_dedupe,
                  "reject instead of collapsing duplicate edges");
  };
  auto resolve_ingest = [&]() {
    if (n_override > 0) ingest.n_override = n_override;
    ingest.drop_self_loops = !keep_self_loops;
    ingest.dedupe = !no_dedupe;
  };

  auto* exact = app.add_subcommand("exact", "exact ccdh and graph stats");
  exact->add_option("input", input)->required();
  exact->add_option("-o,--output", out_csv, "ccdh csv path ('-' = stdout)");
  exact->add_option("--json", out_json, "stats json path ('-' = stderr)");
  add_ingest_flags(exact);

  auto* estimate = app.add_subcommand("estimate", "sampled ccdh estimate");
  estimate->add_option("input", input)->required();
  estimate->add_option("--model", flags.model, "stream1|stream2|query-na|query-ad")
      ->required()
      ->check(CLI::IsMember({"stream1", "stream2", "query-na", "query-ad"}));
  estimate->add_option("--eps-d", flags.eps_d, "domain slack in (0,1)");
  estimate->add_option("--eps-r", flags.eps_r, "range slack in (0,1)");
  estimate->add_option("--c", flags.c, "sample-size constant");
  estimate->add_option("--h-prime", flags.h_prime, "'auto' or integer >= 1");
  estimate->add_option("--seed", flags.seed, "rng seed");
  estimate->add_flag("--no-fallback", flags.no_fallback,
                     "sample even when q >= n or r >= m");
  estimate->add_option("-o,--output", out_csv, "estimate csv ('-' = stdout)");
  estimate->add_option("--json", out_json, "run report json ('-' = stderr)");
  add_ingest_flags(estimate);

  std::string exact_csv_path, estimate_csv_path;
  double eps_d = 0.1, eps_r = 0.1;
  auto* verify = app.add_subcommand("verify-bma", "check an estimate csv");
  verify->add_option("--exact", exact_csv_path)->required();
  verify->add_option("--estimate", estimate_csv_path)->required();
  verify->add_option("--eps-d", eps_d)->required();
  verify->add_option("--eps-r", eps_r)->required();
  verify->add_option("--json", out_json, "verdict json ('-' = stdout)");

  std::string kind, out_path;
  std::uint64_t M = 0, h = 0, n_total = 0, seed = 1;
  bool intersecting = false;
  auto* gadget = app.add_subcommand("gadget", "lower-bound fixture graphs");
  gadget->set_help_flag("--help", "print help");  // frees -h/--h
  gadget->add_option("--kind", kind)->required()
      ->check(CLI::IsMember({"general", "hindex"}));
  gadget->add_option("-M,--m-index,--m", M, "disjointness string length")
      ->required();
  gadget->add_option("--h", h, "target h-index (hindex kind, multiple of 4)");
  gadget->add_flag("--intersecting", intersecting);
  gadget->add_option("--n-total", n_total, "total vertices (default 5M)");
  gadget->add_option("--seed", seed);
  gadget->add_option("-o,--output", out_path)->required();

  std::string synth_model;
  std::uint64_t n = 0, leaves = 0, length = 0, pairs = 0;
  double p = 0, exponent = 2.5, max_weight = 0;
  auto* synth = app.add_subcommand("synth", "synthetic test graphs");
  synth->add_option("--model", synth_model)->required()
      ->check(CLI::IsMember({"gnp", "chung-lu", "star", "path", "matching"}));
  synth->add_option("--n", n);
  synth->add_option("--p", p);
  synth->add_option("--exponent", exponent);
  synth->add_option("--max-weight", max_weight);
  synth->add_option("--leaves", leaves);
  synth->add_option("--length", length);
  synth->add_option("--pairs", pairs);
  synth->add_option("--seed", seed);
  synth->add_option("-o,--output", out_path)->required();

  std::string map_path;
  auto* compact = app.add_subcommand(
      "compact", "relabel sparse ids to dense 0..n-1 with a mapping file");
  compact->add_option("input", input)->required();
  compact->add_option("-o,--output", out_path)->required();
  compact->add_option("--map", map_path, "mapping file ('original new')")
      ->required();

  std::uint64_t trials = 1, seed_base = 1;
  auto* bench = app.add_subcommand("bench", "repeated estimate + verify");
  bench->add_option("input", input)->required();
  bench->add_option("--model", flags.model)->required()
      ->check(CLI::IsMember({"stream1", "stream2", "query-na", "query-ad"}));
  bench->add_option("--eps-d", flags.eps_d);
  bench->add_option("--eps-r", flags.eps_r);
  bench->add_option("--c", flags.c);
  bench->add_option("--h-prime", flags.h_prime);
  bench->add_option("--trials", trials)->check(CLI::PositiveNumber);
  bench->add_option("--seed-base", seed_base);
  bench->add_flag("--no-fallback", flags.no_fallback);
  bench->add_option("--json", out_json, "aggregate json ('-' = stdout)");
  add_ingest_flags(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    resolve_ingest();
    if (exact->parsed()) return cmd_exact(input, out_csv, out_json, ingest);
    if (estimate->parsed())
      return cmd_estimate(input, flags, out_csv, out_json, ingest);
    if (verify->parsed())
      return cmd_verify_bma(exact_csv_path, estimate_csv_path, eps_d, eps_r,
                            out_json);
    if (gadget->parsed())
      return cmd_gadget(kind, M, h, intersecting, n_total, seed, out_path);
    if (synth->parsed())
      return cmd_synth(synth_model, n, p, exponent, max_weight, leaves,
                       length, pairs, seed, out_path);
    if (compact->parsed()) return cmd_compact(input, out_path, map_path);
    if (bench->parsed())
      return cmd_bench(input, flags, trials, seed_base, out_json, ingest);
  } catch (const ccdh::ParamError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ccdh::BoundsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
