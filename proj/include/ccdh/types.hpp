#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ccdh {

using VertexId = std::uint32_t;

// Unordered pair of endpoints. Stored normalized (u <= v) inside Graph;
// streams and samples keep arrival orientation.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

inline Edge normalized(Edge e) {
  if (e.u > e.v) std::swap(e.u, e.v);
  return e;
}

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    std::uint64_t k = (std::uint64_t(e.u) << 32) | e.v;
    k ^= k >> 33;
    k *= 0xff51afd7ed558ccdULL;
    k ^= k >> 33;
    return static_cast<std::size_t>(k);
  }
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParamError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BoundsError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct StreamIntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// z-index on an edgeless graph and similar undefined inputs.
struct UndefinedInputError : std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace ccdh
