#include "ccdh/ccdh.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>

namespace ccdh {

Ccdh ccdh_from_degrees(std::uint64_t n,
                       std::span<const std::uint64_t> degrees) {
  if (degrees.size() != n)
    throw ParamError("ccdh_from_degrees: need one degree per vertex");
  std::uint64_t d_max = 0;
  for (std::uint64_t d : degrees) d_max = std::max(d_max, d);
  std::vector<std::uint64_t> hist(d_max + 1, 0);
  for (std::uint64_t d : degrees) ++hist[d];
  // Suffix sums turn the histogram into C(d).
  Ccdh c;
  c.n = n;
  c.values.assign(d_max + 1, 0);
  std::uint64_t acc = 0;
  for (std::uint64_t d = d_max + 1; d-- > 0;) {
    acc += hist[d];
    c.values[d] = acc;
  }
  return c;
}

Ccdh exact_ccdh(const Graph& g) {
  auto deg = degree_array(g);
  return ccdh_from_degrees(g.vertex_count(), deg);
}

std::uint64_t ccdh_at_real(const Ccdh& c, double x) {
  if (x < 0) throw ParamError("ccdh_at_real: x must be >= 0");
  double cx = std::ceil(x);
  if (cx > static_cast<double>(c.d_max())) return 0;
  return c.values[static_cast<std::uint64_t>(cx)];
}

std::uint64_t h_index(const Ccdh& c) {
  std::uint64_t h = 0;
  for (std::uint64_t d = 1; d < c.values.size(); ++d)
    if (c.values[d] >= d) h = d;
  return h;
}

double z_index(const Ccdh& c) {
  double z = -1.0;
  for (std::uint64_t d = 1; d < c.values.size(); ++d) {
    if (c.values[d] == 0) continue;
    double cand = std::sqrt(static_cast<double>(d) *
                            static_cast<double>(c.values[d]));
    if (z < 0 || cand < z) z = cand;
  }
  if (z < 0)
    throw UndefinedInputError("z_index undefined on an edgeless graph");
  assert(z * z >= static_cast<double>(h_index(c)) - 1e-9);
  return z;
}

std::vector<std::uint64_t> degree_histogram(const Graph& g) {
  Ccdh c = exact_ccdh(g);
  std::vector<std::uint64_t> hist(c.values.size());
  for (std::uint64_t d = 0; d < c.values.size(); ++d)
    hist[d] = c.values[d] - c.at(d + 1);
  return hist;
}

BmaVerdict bma_check(const Ccdh& exact,
                     const std::function<double(std::uint64_t)>& estimate,
                     double eps_d, double eps_r) {
  if (!(eps_d > 0 && eps_d < 1) || !(eps_r > 0 && eps_r < 1))
    throw ParamError("bma_check: eps_d and eps_r must lie in (0,1)");
  BmaVerdict verdict;
  for (std::uint64_t d = 1; d <= exact.n; ++d) {
    double dd = static_cast<double>(d);
    double lower = (1.0 - eps_r) *
                   static_cast<double>(ccdh_at_real(exact, (1.0 + eps_d) * dd));
    double upper = (1.0 + eps_r) *
                   static_cast<double>(ccdh_at_real(exact, (1.0 - eps_d) * dd));
    double est = estimate(d);
    if (est < lower || est > upper)
      verdict.violations.push_back({d, est, lower, upper});
  }
  verdict.pass = verdict.violations.empty();
  return verdict;
}

BmaVerdict bma_check(const Ccdh& exact, std::span<const double> estimate,
                     double eps_d, double eps_r) {
  return bma_check(
      exact,
      [estimate](std::uint64_t d) {
        return d - 1 < estimate.size() ? estimate[d - 1] : 0.0;
      },
      eps_d, eps_r);
}

void write_ccdh_csv(std::ostream& out, const Ccdh& c) {
  out << "degree,ccdh\n";
  for (std::uint64_t d = 0; d < c.values.size(); ++d)
    out << d << ',' << c.values[d] << '\n';
}

namespace {

struct CsvRow {
  std::uint64_t degree;
  double value;
};

bool read_csv_row(std::istream& in, std::uint64_t line_no, CsvRow& row) {
  std::string line;
  if (!std::getline(in, line)) return false;
  char* end = nullptr;
  const char* s = line.c_str();
  unsigned long long d = std::strtoull(s, &end, 10);
  if (end == s || *end != ',')
    throw ParseError("csv line " + std::to_string(line_no) +
                     ": expected 'degree,value'");
  const char* vs = end + 1;
  double v = std::strtod(vs, &end);
  if (end == vs)
    throw ParseError("csv line " + std::to_string(line_no) +
                     ": bad value field");
  row = {d, v};
  return true;
}

void expect_header(std::istream& in) {
  std::string header;
  if (!std::getline(in, header))
    throw ParseError("csv: empty input, expected 'degree,ccdh' header");
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (header != "degree,ccdh")
    throw ParseError("csv: expected 'degree,ccdh' header, got '" + header +
                     "'");
}

}  // namespace

Ccdh read_ccdh_csv(std::istream& in) {
  expect_header(in);
  Ccdh c;
  CsvRow row;
  std::uint64_t line_no = 2;
  std::uint64_t expect_d = 0;
  for (; read_csv_row(in, line_no, row); ++line_no, ++expect_d) {
    if (row.degree != expect_d)
      throw ParseError("csv line " + std::to_string(line_no) +
                       ": degrees must be 0,1,2,... without gaps");
    double integral;
    if (row.value < 0 || std::modf(row.value, &integral) != 0.0)
      throw ParseError("csv line " + std::to_string(line_no) +
                       ": exact ccdh entries must be non-negative integers");
    c.values.push_back(static_cast<std::uint64_t>(row.value));
  }
  if (c.values.empty()) throw ParseError("csv: no rows");
  c.n = c.values[0];
  for (std::uint64_t d = 0; d + 1 < c.values.size(); ++d)
    if (c.values[d] < c.values[d + 1])
      throw ParseError("csv: ccdh must be non-increasing (violated at d=" +
                       std::to_string(d + 1) + ")");
  if (c.values.size() > 1 && c.values.back() == 0)
    throw ParseError("csv: trailing zero rows not allowed in exact ccdh");
  return c;
}

void write_estimate_csv(std::ostream& out, std::span<const double> values) {
  out << "degree,ccdh\n";
  char buf[64];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g", values[i]);
    out << (i + 1) << ',' << buf << '\n';
  }
}

std::map<std::uint64_t, double> read_estimate_csv(std::istream& in) {
  expect_header(in);
  std::map<std::uint64_t, double> est;
  CsvRow row;
  std::uint64_t line_no = 2;
  for (; read_csv_row(in, line_no, row); ++line_no) {
    if (row.degree == 0)
      throw ParseError("csv line " + std::to_string(line_no) +
                       ": estimates start at degree 1");
    if (row.value < 0)
      throw ParseError("csv line " + std::to_string(line_no) +
                       ": estimate entries must be non-negative");
    if (!est.emplace(row.degree, row.value).second)
      throw ParseError("csv line " + std::to_string(line_no) +
                       ": duplicate degree");
  }
  return est;
}

}  // namespace ccdh
