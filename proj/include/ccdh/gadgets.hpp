#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccdh/graph.hpp"
#include "ccdh/rng.hpp"

namespace ccdh {

// Promise set-disjointness input: bit strings x, y of length M with
// sum_i x_i*y_i <= 1.
struct DisjointnessInstance {
  std::uint64_t M = 0;
  std::vector<std::uint8_t> x;
  std::vector<std::uint8_t> y;
  bool promise = true;
};

// Number of common 1-indices; the brute-force validator for the promise.
std::uint64_t instance_intersection(const DisjointnessInstance& inst);

// Random instance with exactly one common 1-index if intersecting, none
// otherwise.
DisjointnessInstance gen_disjointness_instance(std::uint64_t M,
                                               bool intersecting,
                                               SeededRng& rng);

// Five vertices 5i..5i+4 per string index: x_i=1 -> (5i,5i+1), x_i=0 ->
// (5i+1,5i+3); y_i=1 -> (5i,5i+2), y_i=0 -> (5i+2,5i+4). n = 5M, m = 2M;
// exactly one degree-2 vertex iff the instance intersects.
Graph gen_general_gadget(const DisjointnessInstance& inst);

// Independent sets A,B,C,D,E of size M, ids A=[0,M), B=[M,2M), C=[2M,3M),
// D=[3M,4M), E=[4M,5M), isolated I=[5M,n_total). Per index i (b/c indices
// mod M): x_i=1 gives a_i -> b_{i..i+3h/4-1} and d_i -> b_{i+3h/4..i+h-1};
// x_i=0 gives a_i -> b_{i..i+h/4-1} and d_i -> b_{i+h/4..i+h-1}; y likewise
// with C and E. Every B/C vertex gets degree exactly h; h-index is h.
// Requires h divisible by 4, M >= h, n_total >= 5M.
Graph gen_hindex_gadget(const DisjointnessInstance& inst, std::uint64_t h,
                        std::uint64_t n_total);

struct GadgetSpec {
  enum class Kind { general, hindex };
  Kind kind = Kind::general;
  std::uint64_t M = 0;
  std::uint64_t h = 0;        // hindex kind only
  std::uint64_t n_total = 0;  // hindex kind only
};

struct GadgetValidation {
  bool ok = true;
  std::string failure;  // first violated claim
};

// Checks vertex/edge counts, per-set degrees, h-index, and the closed-form
// ccdh shape for the intersecting/disjoint case.
GadgetValidation validate_gadget(const Graph& g, const GadgetSpec& spec,
                                 const DisjointnessInstance& inst);

}  // namespace ccdh
