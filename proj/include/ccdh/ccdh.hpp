#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "ccdh/graph.hpp"

namespace ccdh {

// Exact complementary cumulative degree histogram of a graph with n vertices:
// values[d] = |{v : degree(v) >= d}| for d in 0..=d_max, where d_max is the
// largest degree with values[d_max] >= 1 (0 for edgeless graphs).
// Invariants: values[0] == n, non-increasing, values[d] <= n.
struct Ccdh {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> values;

  std::uint64_t d_max() const { return values.size() - 1; }
  std::uint64_t at(std::uint64_t d) const {
    return d < values.size() ? values[d] : 0;
  }

  friend bool operator==(const Ccdh&, const Ccdh&) = default;
};

Ccdh exact_ccdh(const Graph& g);
Ccdh ccdh_from_degrees(std::uint64_t n, std::span<const std::uint64_t> degrees);

// Real-argument extension C(x) := C(ceil(x)). Exact, since degrees are
// integers: |{v : d(v) >= x}| = |{v : d(v) >= ceil(x)}|.
std::uint64_t ccdh_at_real(const Ccdh& c, double x);

// max{d : C(d) >= d}; 0 only on edgeless graphs.
std::uint64_t h_index(const Ccdh& c);

// min over d >= 1 with C(d) > 0 of sqrt(d*C(d)). Requires at least one edge.
double z_index(const Ccdh& c);

// n_d for d in 0..=d_max; n_d = C(d) - C(d+1), sums to n.
std::vector<std::uint64_t> degree_histogram(const Graph& g);

struct BmaViolation {
  std::uint64_t d = 0;
  double estimate = 0;
  double lower = 0;
  double upper = 0;
};

struct BmaVerdict {
  bool pass = true;
  std::vector<BmaViolation> violations;
};

// Bi-criteria multiplicative approximation check over d = 1..n:
//   (1-eps_r)*C((1+eps_d)*d) <= estimate(d) <= (1+eps_r)*C((1-eps_d)*d).
// estimate(d) must be defined for all d (absent entries read as 0); values
// are compared as reals without rounding. eps outside (0,1) is an error.
BmaVerdict bma_check(const Ccdh& exact,
                     const std::function<double(std::uint64_t)>& estimate,
                     double eps_d, double eps_r);

// Convenience over a dense vector where estimate[i] holds the value at
// degree i+1 and entries beyond the vector are 0.
BmaVerdict bma_check(const Ccdh& exact, std::span<const double> estimate,
                     double eps_d, double eps_r);

// CSV format: header "degree,ccdh", one row per degree, ascending.
void write_ccdh_csv(std::ostream& out, const Ccdh& c);
Ccdh read_ccdh_csv(std::istream& in);  // enforces Ccdh invariants

// Estimates share the same format with real-valued entries and rows from
// d = 1 upward; absent degrees are 0.
void write_estimate_csv(std::ostream& out, std::span<const double> values);
std::map<std::uint64_t, double> read_estimate_csv(std::istream& in);

}  // namespace ccdh
