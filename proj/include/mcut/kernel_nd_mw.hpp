#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "enumerate.hpp"
#include "graph.hpp"
#include "kernel_vc.hpp"
#include "parameters.hpp"
#include "pendant_lift.hpp"

namespace mcut {

enum class NdLabel { Ordinary, Trivial, Pendant, Subpendant };

struct NdContext {
  VertexClassPartition modules;
  Quotient quotient;
  std::vector<NdLabel> labels;  // per module
  VertexSet w;                  // marked vertices, host coordinates
  PendantClasses pendant;       // L_x for subpendant vertices x, host coordinates
  std::vector<Vertex> to_host;
  bool trivial = false;         // edgeless host
};

struct NdKernel {
  Graph h;
  NdContext ctx;
};

namespace detail {

inline bool independent_module(const VertexClassPartition& p, std::size_t b) {
  return p.blocks[b].size() == 1 || p.kind(b) == ModuleKind::Independent;
}

}  // namespace detail

inline NdKernel kernelize_nd(const Graph& g) {
  NdKernel k;
  NdContext& c = k.ctx;
  const int n = g.n();
  if (g.m() == 0) {
    c.trivial = true;
    int keep = std::min(n, 2);
    k.h = edgeless_graph(keep);
    for (int v = 0; v < keep; ++v) c.to_host.push_back(v);
    return k;
  }
  c.modules = twin_classes(g, TwinMode::Neighborhood);
  c.quotient = quotient_graph(g, c.modules);
  const Graph& q = c.quotient.graph;
  const std::size_t r = c.modules.size();
  c.labels.assign(r, NdLabel::Ordinary);
  for (std::size_t b = 0; b < r; ++b) {
    if (!detail::independent_module(c.modules, b)) continue;
    const Vertex node = static_cast<Vertex>(b);
    if (q.degree(node) == 0) {
      c.labels[b] = NdLabel::Trivial;
      continue;
    }
    if (q.degree(node) != 1) continue;
    const Vertex nb = q.neighbors(node)[0];
    if (c.modules.blocks[static_cast<std::size_t>(nb)].size() != 1) continue;
    // Two adjacent singletons of quotient degree one would be true twins, so a
    // module is never both pendant and subpendant.
    c.labels[b] = NdLabel::Pendant;
    c.labels[static_cast<std::size_t>(nb)] = NdLabel::Subpendant;
  }
  for (std::size_t b = 0; b < r; ++b) {
    const VertexSet& u = c.modules.blocks[b];
    const bool single = c.labels[b] == NdLabel::Trivial || c.labels[b] == NdLabel::Pendant;
    const std::size_t take = single ? 1 : std::min<std::size_t>(3, u.size());
    c.w.insert(c.w.end(), u.begin(), u.begin() + static_cast<std::ptrdiff_t>(take));
    if (c.labels[b] == NdLabel::Pendant) {
      const Vertex x = c.modules.blocks[static_cast<std::size_t>(q.neighbors(static_cast<Vertex>(b))[0])][0];
      std::vector<Edge> lx;
      for (Vertex y : u) lx.push_back(make_edge(x, y));
      c.pendant.add(x, std::move(lx));
    }
  }
  std::sort(c.w.begin(), c.w.end());
  auto sub = induced_subgraph(g, c.w);
  k.h = std::move(sub.graph);
  c.to_host = std::move(sub.to_host);
  return k;
}

inline bool nd_within_bound(const NdKernel& k) {
  if (k.ctx.trivial) return k.h.n() <= 2;
  return static_cast<std::size_t>(k.h.n()) <= 3 * k.ctx.modules.size();
}

inline CutStream lift_nd(const Graph& /*g*/, const NdKernel& k, const Cut& m, Kind /*kind*/) {
  require_cut(k.h, m);
  return lift_pendant(k.ctx.pendant, map_cut(m, k.ctx.to_host));
}

struct MwContext {
  VertexClassPartition modules;
  std::vector<VertexSet> x, y;  // per module: isolated in G[U_i], and the rest
  Graph gprime;                 // G with every Y_i completed to a clique
  bool disconnected = false;    // kernel 2K1, only the empty cut
  NdKernel inner;
};

struct MwKernel {
  Graph h;
  MwContext ctx;
};

inline MwKernel kernelize_mw_minimal(const Graph& g, const std::optional<VertexClassPartition>& supplied = std::nullopt) {
  MwKernel k;
  MwContext& c = k.ctx;
  if (g.n() >= 2 && !is_connected(g)) {
    c.disconnected = true;
    k.h = edgeless_graph(2);
    return k;
  }
  c.gprime = g;
  if (g.n() >= 2) {
    c.modules = modular_partition(g, supplied);
    if (c.modules.size() < 2) throw std::invalid_argument("modular partition needs at least two blocks");
    std::vector<Edge> edges = g.edges();
    for (const VertexSet& u : c.modules.blocks) {
      auto sub = induced_subgraph(g, u);
      VertexSet xi, yi;
      for (Vertex i = 0; i < sub.graph.n(); ++i) (sub.graph.degree(i) == 0 ? xi : yi).push_back(sub.to_host[i]);
      for (std::size_t a = 0; a < yi.size(); ++a)
        for (std::size_t b = a + 1; b < yi.size(); ++b) edges.push_back({yi[a], yi[b]});
      c.x.push_back(std::move(xi));
      c.y.push_back(std::move(yi));
    }
    c.gprime = build_graph(g.n(), edges);
  }
  c.inner = kernelize_nd(c.gprime);
  k.h = c.inner.h;
  return k;
}

inline bool mw_within_bound(const MwKernel& k) {
  if (k.ctx.disconnected || k.ctx.modules.size() == 0) return k.h.n() <= 2;
  return static_cast<std::size_t>(k.h.n()) <= 6 * k.ctx.modules.size();
}

// Cuts of G' are cuts of G with the same edges: the completed Y_i never cross.
inline CutStream lift_mw_minimal(const Graph& g, const MwKernel& k, const Cut& m) {
  if (k.ctx.disconnected) {
    if (!m.empty()) throw std::invalid_argument("kernel 2K1 has only the empty cut");
    return detail::from_list({Cut{}});
  }
  return lift_nd(g, k.ctx.inner, m, Kind::Minimal);
}

}  // namespace mcut
