#include "ccdh/gadgets.hpp"

#include <algorithm>

#include "ccdh/ccdh.hpp"

namespace ccdh {

std::uint64_t instance_intersection(const DisjointnessInstance& inst) {
  std::uint64_t dot = 0;
  for (std::uint64_t i = 0; i < inst.M; ++i)
    dot += static_cast<std::uint64_t>(inst.x[i]) * inst.y[i];
  return dot;
}

DisjointnessInstance gen_disjointness_instance(std::uint64_t M,
                                               bool intersecting,
                                               SeededRng& rng) {
  if (M < 1) throw ParamError("disjointness instance needs M >= 1");
  DisjointnessInstance inst;
  inst.M = M;
  inst.x.assign(M, 0);
  inst.y.assign(M, 0);
  std::uint64_t common = intersecting ? rng.uniform_below(M) : M;
  for (std::uint64_t i = 0; i < M; ++i) {
    if (i == common) {
      inst.x[i] = 1;
      inst.y[i] = 1;
      continue;
    }
    // Uniform over the three non-intersecting bit pairs.
    switch (rng.uniform_below(3)) {
      case 0: break;
      case 1: inst.x[i] = 1; break;
      default: inst.y[i] = 1; break;
    }
  }
  if (instance_intersection(inst) != (intersecting ? 1u : 0u))
    throw ParamError("disjointness generator violated its promise");
  return inst;
}

Graph gen_general_gadget(const DisjointnessInstance& inst) {
  std::vector<Edge> edges;
  edges.reserve(2 * inst.M);
  for (std::uint64_t i = 0; i < inst.M; ++i) {
    auto base = static_cast<VertexId>(5 * i);
    if (inst.x[i])
      edges.push_back({base, static_cast<VertexId>(base + 1)});
    else
      edges.push_back({static_cast<VertexId>(base + 1),
                       static_cast<VertexId>(base + 3)});
    if (inst.y[i])
      edges.push_back({base, static_cast<VertexId>(base + 2)});
    else
      edges.push_back({static_cast<VertexId>(base + 2),
                       static_cast<VertexId>(base + 4)});
  }
  return Graph::from_edges(5 * inst.M, std::move(edges));
}

Graph gen_hindex_gadget(const DisjointnessInstance& inst, std::uint64_t h,
                        std::uint64_t n_total) {
  const std::uint64_t M = inst.M;
  if (h < 4 || h % 4 != 0)
    throw ParamError("hindex gadget: h must be a positive multiple of 4");
  if (M < h) throw ParamError("hindex gadget: M must be >= h");
  if (n_total < 5 * M) throw ParamError("hindex gadget: n_total must be >= 5M");

  std::vector<Edge> edges;
  edges.reserve(2 * h * M);
  auto add_side = [&](const std::vector<std::uint8_t>& bits,
                      std::uint64_t hub_base, std::uint64_t spoke_base,
                      std::uint64_t far_base) {
    for (std::uint64_t i = 0; i < M; ++i) {
      std::uint64_t split = bits[i] ? 3 * h / 4 : h / 4;
      for (std::uint64_t k = 0; k < h; ++k) {
        std::uint64_t hub = k < split ? hub_base + i : far_base + i;
        std::uint64_t spoke = spoke_base + (i + k) % M;
        edges.push_back({static_cast<VertexId>(hub),
                         static_cast<VertexId>(spoke)});
      }
    }
  };
  add_side(inst.x, 0, M, 3 * M);      // a_i / b_j / d_i
  add_side(inst.y, 0, 2 * M, 4 * M);  // a_i / c_j / e_i
  return Graph::from_edges(n_total, std::move(edges));
}

namespace {

GadgetValidation fail(std::string what) { return {false, std::move(what)}; }

GadgetValidation validate_general(const Graph& g,
                                  const DisjointnessInstance& inst) {
  const std::uint64_t M = inst.M;
  const bool intersects = instance_intersection(inst) > 0;
  if (g.vertex_count() != 5 * M) return fail("vertex count != 5M");
  if (g.edge_count() != 2 * M) return fail("edge count != 2M");
  Ccdh c = exact_ccdh(g);
  std::uint64_t expect_active = intersects ? 4 * M - 1 : 4 * M;
  if (c.at(1) != expect_active)
    return fail("C(1) != number of matched vertices");
  if (c.at(2) != (intersects ? 1u : 0u))
    return fail("C(2) mismatch with intersection promise");
  if (c.at(3) != 0) return fail("C(3) != 0");
  if (h_index(c) != 1) return fail("h-index != 1");
  if (intersects) {
    // The one degree-2 vertex must be 5j for the common index j.
    for (std::uint64_t i = 0; i < M; ++i) {
      bool common = inst.x[i] && inst.y[i];
      if ((g.degree(static_cast<VertexId>(5 * i)) == 2) != common)
        return fail("degree-2 vertex is not the common-index hub");
    }
  }
  return {};
}

GadgetValidation validate_hindex(const Graph& g, const GadgetSpec& spec,
                                 const DisjointnessInstance& inst) {
  const std::uint64_t M = inst.M;
  const std::uint64_t h = spec.h;
  const bool intersects = instance_intersection(inst) > 0;
  if (g.vertex_count() != spec.n_total) return fail("vertex count != n_total");
  if (g.edge_count() != 2 * h * M) return fail("edge count != 2hM");

  for (std::uint64_t i = 0; i < M; ++i) {
    std::uint64_t xa = inst.x[i] ? 3 * h / 4 : h / 4;
    std::uint64_t ya = inst.y[i] ? 3 * h / 4 : h / 4;
    if (g.degree(static_cast<VertexId>(i)) != xa + ya)
      return fail("A-vertex degree != h/2, h, or 6h/4 per its bits");
    if (g.degree(static_cast<VertexId>(M + i)) != h)
      return fail("B-vertex degree != h");
    if (g.degree(static_cast<VertexId>(2 * M + i)) != h)
      return fail("C-vertex degree != h");
    if (g.degree(static_cast<VertexId>(3 * M + i)) != h - xa)
      return fail("D-vertex degree mismatch");
    if (g.degree(static_cast<VertexId>(4 * M + i)) != h - ya)
      return fail("E-vertex degree mismatch");
  }
  for (std::uint64_t v = 5 * M; v < spec.n_total; ++v)
    if (g.degree(static_cast<VertexId>(v)) != 0)
      return fail("isolated-set vertex has an edge");

  Ccdh c = exact_ccdh(g);
  if (h_index(c) != h) return fail("h-index != h");
  for (std::uint64_t d = 1; d <= h; ++d)
    if (c.at(d) <= h) return fail("C(d) <= h for some d <= h");
  for (std::uint64_t d = h + 1; d <= 6 * h / 4; ++d)
    if (c.at(d) != (intersects ? 1u : 0u))
      return fail("C(d) for h < d <= 6h/4 mismatches intersection promise");
  if (c.at(6 * h / 4 + 1) != 0) return fail("C(d) != 0 beyond 6h/4");
  return {};
}

}  // namespace

GadgetValidation validate_gadget(const Graph& g, const GadgetSpec& spec,
                                 const DisjointnessInstance& inst) {
  if (inst.M != spec.M) return fail("spec M != instance M");
  if (instance_intersection(inst) > 1) return fail("promise violated");
  switch (spec.kind) {
    case GadgetSpec::Kind::general:
      return validate_general(g, inst);
    case GadgetSpec::Kind::hindex:
      return validate_hindex(g, spec, inst);
  }
  return fail("unknown gadget kind");
}

}  // namespace ccdh
