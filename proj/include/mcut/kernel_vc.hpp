#pragma once

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "enumerate.hpp"
#include "graph.hpp"
#include "parameters.hpp"
#include "pendant_lift.hpp"

namespace mcut {

struct VcContext {
  VertexSet x;
  VertexSet z;  // marked vertices outside the cover
  VertexSet i0, i1, i2;
  PendantClasses pendant;          // L_x over x in X, host coordinates
  std::vector<Vertex> to_host;     // kernel vertex -> host vertex
  bool trivial = false;            // K1 or edgeless host
};

struct VcKernel {
  Graph h;
  VcContext ctx;
};

inline std::size_t vc_size_bound(std::size_t cover) { return 1 + 2 * cover + 3 * (cover * (cover - 1) / 2); }

// The edgeless case returns 2K1 whatever the cover size.
inline bool vc_within_bound(const VcKernel& k) {
  if (k.ctx.trivial) return k.h.n() <= 2;
  return static_cast<std::size_t>(k.h.n()) <= vc_size_bound(k.ctx.x.size());
}

inline VcKernel kernelize_vc(const Graph& g) {
  VcKernel k;
  const int n = g.n();
  if (g.m() == 0) {
    k.ctx.trivial = true;
    int keep = std::min(n, 2);
    k.h = edgeless_graph(keep);
    for (int v = 0; v < keep; ++v) k.ctx.to_host.push_back(v);
    return k;
  }
  VcContext& c = k.ctx;
  c.x = vc_2approx(g);
  std::vector<char> in_x(static_cast<std::size_t>(n), 0);
  for (Vertex v : c.x) in_x[v] = 1;
  std::vector<int> cls(static_cast<std::size_t>(n), -1);  // 0,1,2 for I0,I1,I>=2
  for (Vertex v = 0; v < n; ++v) {
    if (in_x[v]) continue;
    int d = g.degree(v);
    cls[v] = d >= 2 ? 2 : d;
    (d == 0 ? c.i0 : d == 1 ? c.i1 : c.i2).push_back(v);
  }
  std::set<Vertex> marked;
  if (!c.i0.empty()) marked.insert(c.i0.front());
  for (Vertex x : c.x) {
    std::vector<Edge> lx;
    for (Vertex y : g.neighbors(x))
      if (cls[y] == 1) lx.push_back(make_edge(x, y));
    if (lx.empty()) continue;
    // Edges x-y sort by y, so the designated edge reaches the lowest I1 neighbour.
    const Edge& first = *std::min_element(lx.begin(), lx.end());
    marked.insert(first.u == x ? first.v : first.u);
    c.pendant.add(x, std::move(lx));
  }
  for (std::size_t a = 0; a < c.x.size(); ++a)
    for (std::size_t b = a + 1; b < c.x.size(); ++b) {
      const auto& na = g.neighbors(c.x[a]);
      const auto& nb = g.neighbors(c.x[b]);
      int taken = 0;
      for (std::size_t i = 0, j = 0; i < na.size() && j < nb.size() && taken < 3;) {
        if (na[i] < nb[j]) {
          ++i;
        } else if (nb[j] < na[i]) {
          ++j;
        } else {
          if (cls[na[i]] == 2) {
            marked.insert(na[i]);
            ++taken;
          }
          ++i;
          ++j;
        }
      }
    }
  c.z.assign(marked.begin(), marked.end());
  VertexSet keep = c.x;
  keep.insert(keep.end(), c.z.begin(), c.z.end());
  std::sort(keep.begin(), keep.end());
  auto sub = induced_subgraph(g, keep);
  k.h = std::move(sub.graph);
  c.to_host = std::move(sub.to_host);
  return k;
}

inline void require_cut(const Graph& h, const Cut& m) {
  for (const Edge& e : m)
    if (!h.has_edge(e)) throw std::invalid_argument("kernel cut uses an edge outside the kernel");
  if (!is_matching_cut(h, m)) throw std::invalid_argument("not a matching cut of the kernel: " + to_string(m));
}

// The same stream serves every kind: for minimal kernel cuts it reduces to the
// single-swap rule, and for all/maximal it is the product over L_x choices.
inline CutStream lift_vc(const Graph& /*g*/, const VcKernel& k, const Cut& m, Kind /*kind*/) {
  require_cut(k.h, m);
  return lift_pendant(k.ctx.pendant, map_cut(m, k.ctx.to_host));
}

namespace detail {

// Branch-and-reduce over the vertices outside the cover for one fixed split of
// the cover. side: 0 = A, 1 = B, -1 unassigned.
inline void enumerate_mc(const Graph& h, std::vector<int>& side, const std::vector<Vertex>& rest,
                         std::set<Cut>& out) {
  // Step 1: the crossing edges among assigned vertices must form a matching.
  std::vector<int> hits(static_cast<std::size_t>(h.n()), 0);
  for (const Edge& e : h.edges())
    if (side[e.u] >= 0 && side[e.v] >= 0 && side[e.u] != side[e.v])
      if (++hits[e.u] > 1 || ++hits[e.v] > 1) return;
  Vertex pick = -1;
  for (Vertex v : rest)
    if (side[v] < 0) {
      pick = v;
      break;
    }
  if (pick < 0) {
    std::vector<char> s(side.begin(), side.end());
    Cut c = edge_cut(h, s);
    if (!c.empty()) out.insert(c);
    return;
  }
  // Reduction rules, applied to the first vertex that triggers one.
  for (Vertex v : rest) {
    if (side[v] >= 0) continue;
    int na = 0, nb = 0;
    bool sat_a = false, sat_b = false;
    for (Vertex w : h.neighbors(v)) {
      if (side[w] == 0) {
        ++na;
        sat_a = sat_a || hits[w] > 0;
      } else if (side[w] == 1) {
        ++nb;
        sat_b = sat_b || hits[w] > 0;
      }
    }
    int forced = -1;
    if (na >= 2 || sat_a) forced = 0;
    if (nb >= 2 || sat_b) {
      if (forced == 0) return;
      forced = 1;
    }
    if (forced >= 0) {
      side[v] = forced;
      enumerate_mc(h, side, rest, out);
      side[v] = -1;
      return;
    }
  }
  for (int s : {0, 1}) {
    side[pick] = s;
    enumerate_mc(h, side, rest, out);
  }
  side[pick] = -1;
}

}  // namespace detail

// All matching cuts of a graph with a small vertex cover, by branching over
// splits of the cover and combining with the pendant edges.
inline std::vector<Cut> enum_mc_bounded_vc(const Graph& h, const VertexSet& x_in) {
  VertexSet x = x_in;
  std::sort(x.begin(), x.end());
  x.erase(std::unique(x.begin(), x.end()), x.end());
  for (Vertex v : x)
    if (v < 0 || v >= h.n()) throw std::invalid_argument("cover vertex out of range");
  if (!is_vertex_cover(h, x)) throw std::invalid_argument("supplied set is not a vertex cover");
  const int n = h.n();
  std::vector<char> in_x(static_cast<std::size_t>(n), 0);
  for (Vertex v : x) in_x[v] = 1;

  // M1 candidates: per cover vertex, none or one pendant edge.
  std::vector<std::vector<Cut>> options;
  for (Vertex v : x) {
    std::vector<Cut> opt{Cut{}};
    for (Vertex y : h.neighbors(v))
      if (!in_x[y] && h.degree(y) == 1) opt.push_back(Cut{make_edge(v, y)});
    if (opt.size() > 1) options.push_back(std::move(opt));
  }
  std::set<Cut> m1;
  std::vector<Edge> acc;
  detail::product(options, 0, acc, m1);
  if (options.empty()) m1.insert(Cut{});

  // M2 candidates: cuts of H' = H - (I0 u I1).
  VertexSet keep;
  for (Vertex v = 0; v < n; ++v)
    if (in_x[v] || h.degree(v) >= 2) keep.push_back(v);
  auto sub = induced_subgraph(h, keep);
  const Graph& hp = sub.graph;
  std::vector<Vertex> cover_local, rest_local;
  for (Vertex i = 0; i < hp.n(); ++i) (in_x[sub.to_host[i]] ? cover_local : rest_local).push_back(i);
  std::set<Cut> m2_local;
  if (!cover_local.empty()) {
    const std::size_t c = cover_local.size();
    std::vector<int> side(static_cast<std::size_t>(hp.n()), -1);
    for (std::uint64_t mask = 0; mask < (1ull << (c - 1)); ++mask) {
      for (std::size_t i = 0; i < c; ++i) side[cover_local[i]] = i == 0 ? 0 : static_cast<int>(mask >> (i - 1) & 1u);
      for (Vertex v : rest_local) side[v] = -1;
      detail::enumerate_mc(hp, side, rest_local, m2_local);
    }
  }
  std::vector<Cut> m2{Cut{}};
  for (const Cut& c : m2_local) m2.push_back(map_cut(c, sub.to_host));

  std::set<Cut> out;
  for (const Cut& a : m1)
    for (const Cut& b : m2) {
      Cut m = cut_union(a, b);
      if (m.empty()) continue;
      if (is_matching_cut(h, m)) out.insert(m);
    }
  if (n >= 2 && !is_connected(h)) out.insert(Cut{});
  return {out.begin(), out.end()};
}

}  // namespace mcut
