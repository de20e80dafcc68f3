#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "enumerate.hpp"
#include "graph.hpp"
#include "kernel_vc.hpp"
#include "parameters.hpp"

namespace mcut {

// Result of the twin-class reduction rules. The reduced graph G* keeps host
// vertex ids through to_host; it is G restricted to the surviving vertices
// plus the edges completed inside neighbourhoods of shrunk classes.
struct TwinReduction {
  Graph gstar;
  std::vector<Vertex> gstar_to_host;
  Graph ghat;                       // G* without its K2 components
  std::vector<Vertex> ghat_to_host;
  std::vector<Edge> k2_edges;       // host coordinates, sorted
  VertexSet z_vertices;             // host vertices of the frozen quotient cover
  std::vector<Edge> added;          // host coordinates, edges not in G
};

namespace detail {

struct WorkGraph {
  int n = 0;
  std::vector<char> alive;
  std::vector<Edge> edges;  // host coordinates, both ends alive

  Subgraph view() const {
    VertexSet keep;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v]) keep.push_back(v);
    std::vector<Edge> local;
    std::vector<Vertex> from(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) from[keep[i]] = static_cast<Vertex>(i);
    for (const Edge& e : edges) local.push_back({from[e.u], from[e.v]});
    return {build_graph(static_cast<int>(keep.size()), local), keep, from};
  }

  void kill(Vertex v) {
    alive[v] = 0;
    std::erase_if(edges, [v](const Edge& e) { return e.u == v || e.v == v; });
  }
};

inline VertexSet open_neighbourhood(const Graph& g, const VertexSet& s) {
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : s) in[v] = 1;
  VertexSet out;
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (!in[w]) out.push_back(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// One application of the first rule among 1-3 that fires; false at the fixpoint.
inline bool apply_class_rule(WorkGraph& w) {
  Subgraph s = w.view();
  auto classes = twin_classes(s.graph, TwinMode::TrueTwin);
  for (const VertexSet& c : classes.blocks)
    if (c.size() >= 4) {
      for (std::size_t i = 3; i < c.size(); ++i) w.kill(s.to_host[c[i]]);
      return true;
    }
  for (const VertexSet& c : classes.blocks)
    if (c.size() == 3 && open_neighbourhood(s.graph, c).empty()) {
      w.kill(s.to_host[c[1]]);
      w.kill(s.to_host[c[2]]);
      return true;
    }
  for (const VertexSet& c : classes.blocks)
    if (c.size() >= 2 && open_neighbourhood(s.graph, c).size() == 1) {
      for (Vertex v : c) w.kill(s.to_host[v]);
      return true;
    }
  return false;
}

}  // namespace detail

inline TwinReduction reduce_twin_cover(const Graph& g) {
  detail::WorkGraph w{g.n(), std::vector<char>(static_cast<std::size_t>(g.n()), 1), g.edges()};
  while (detail::apply_class_rule(w)) {
  }
  TwinReduction r;

  // Freeze the quotient cover, then shrink the classes outside it.
  std::vector<VertexSet> free_classes;
  {
    Subgraph s = w.view();
    auto classes = twin_classes(s.graph, TwinMode::TrueTwin);
    auto q = quotient_graph(s.graph, classes);
    VertexSet cover = vc_2approx(q.graph);
    std::vector<char> in_cover(classes.size(), 0);
    for (Vertex b : cover) in_cover[static_cast<std::size_t>(b)] = 1;
    for (std::size_t b = 0; b < classes.size(); ++b) {
      VertexSet host;
      for (Vertex v : classes.blocks[b]) host.push_back(s.to_host[v]);
      if (in_cover[b]) {
        r.z_vertices.insert(r.z_vertices.end(), host.begin(), host.end());
      } else {
        free_classes.push_back(std::move(host));
      }
    }
    std::sort(r.z_vertices.begin(), r.z_vertices.end());
  }
  std::set<Edge> original(g.edges().begin(), g.edges().end());
  for (const VertexSet& c : free_classes) {
    if (c.size() < 2) continue;
    Subgraph s = w.view();
    VertexSet local;
    for (Vertex v : c) local.push_back(s.from_host[v]);
    VertexSet nb = detail::open_neighbourhood(s.graph, local);
    if (nb.size() < 2) continue;
    for (std::size_t i = 1; i < c.size(); ++i) w.kill(c[i]);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        Edge e = make_edge(s.to_host[nb[i]], s.to_host[nb[j]]);
        if (!std::binary_search(w.edges.begin(), w.edges.end(), e)) {
          w.edges.insert(std::upper_bound(w.edges.begin(), w.edges.end(), e), e);
          if (!original.count(e)) r.added.push_back(e);
        }
      }
  }
  std::sort(r.added.begin(), r.added.end());

  Subgraph s = w.view();
  r.gstar = s.graph;
  r.gstar_to_host = s.to_host;
  VertexSet hat;
  for (const VertexSet& comp : components(r.gstar)) {
    if (comp.size() == 2 && r.gstar.has_edge(comp[0], comp[1])) {
      r.k2_edges.push_back(make_edge(r.gstar_to_host[comp[0]], r.gstar_to_host[comp[1]]));
    } else {
      hat.insert(hat.end(), comp.begin(), comp.end());
    }
  }
  std::sort(r.k2_edges.begin(), r.k2_edges.end());
  std::sort(hat.begin(), hat.end());
  auto sub = induced_subgraph(r.gstar, hat);
  r.ghat = std::move(sub.graph);
  for (Vertex v : sub.to_host) r.ghat_to_host.push_back(r.gstar_to_host[v]);
  return r;
}

struct TcContext {
  Kind kind = Kind::All;
  TwinReduction red;
  // Graph handed to the vertex-cover kernel: Ghat, plus one K2 standing for
  // all K2 components (All/Maximal with s >= 1).
  Graph gprime;
  std::vector<Vertex> gprime_to_host;
  std::optional<Edge> marker;  // host coordinates; one of red.k2_edges
  bool empty_only = false;     // Minimal on a disconnected G*: the only solution is the empty cut
  VcKernel inner;
};

struct TcKernel {
  Graph h;
  TcContext ctx;
};

inline TcKernel kernelize_tc(const Graph& g, Kind kind) {
  TcKernel k;
  TcContext& c = k.ctx;
  c.kind = kind;
  c.red = reduce_twin_cover(g);
  const std::size_t s = c.red.k2_edges.size();
  // G* is disconnected unless it is a single K2.
  if (kind == Kind::Minimal && s >= 1 && (s >= 2 || c.red.ghat.n() > 0)) {
    c.empty_only = true;
    k.h = edgeless_graph(2);
    return k;
  }
  c.gprime = c.red.ghat;
  c.gprime_to_host = c.red.ghat_to_host;
  if (s >= 1) {
    const Edge e = c.red.k2_edges.front();
    std::vector<Edge> edges = c.gprime.edges();
    int n = c.gprime.n();
    // With nothing left besides K2 components, an isolated stand-in vertex keeps
    // the graph disconnected when s >= 2, so the empty cut survives.
    if (n == 0 && s >= 2) {
      c.gprime_to_host.push_back(c.red.k2_edges[1].u);
      n = 1;
    }
    edges.push_back({n, n + 1});
    c.gprime = build_graph(n + 2, edges);
    c.gprime_to_host.push_back(e.u);
    c.gprime_to_host.push_back(e.v);
    c.marker = e;
  }
  c.inner = kernelize_vc(c.gprime);
  k.h = c.inner.h;
  return k;
}

inline bool tc_within_bound(const TcKernel& k) {
  if (k.ctx.empty_only) return k.h.n() == 2;
  return vc_within_bound(k.ctx.inner);
}

namespace detail {

inline CutStream lift_tc_stream(const TcContext& c, Cut m, Kind kind) {
  if (c.empty_only) {
    co_yield Cut{};
    co_return;
  }
  for (const Cut& local : lift_vc(c.gprime, c.inner, m, kind)) {
    Cut cut = map_cut(local, c.gprime_to_host);
    if (!c.marker || !cut.contains(*c.marker)) {
      co_yield cut;
      continue;
    }
    const Cut rest = cut_minus(cut, Cut{*c.marker});
    const auto& k2 = c.red.k2_edges;
    if (kind == Kind::Maximal) {
      co_yield cut_union(rest, Cut(k2));
      continue;
    }
    // Every nonempty subset of the K2 edges, as a binary counter.
    std::vector<char> pick(k2.size(), 0);
    while (true) {
      std::size_t i = 0;
      while (i < pick.size() && pick[i]) pick[i++] = 0;
      if (i == pick.size()) break;
      pick[i] = 1;
      std::vector<Edge> l;
      for (std::size_t j = 0; j < k2.size(); ++j)
        if (pick[j]) l.push_back(k2[j]);
      co_yield cut_union(rest, Cut(std::move(l)));
    }
  }
}

}  // namespace detail

// The context must outlive the returned stream.
inline CutStream lift_tc(const Graph& /*g*/, const TcContext& c, const Cut& m, Kind kind) {
  if (c.empty_only) {
    if (!m.empty()) throw std::invalid_argument("kernel 2K1 has only the empty cut");
  } else {
    require_cut(c.inner.h, m);
  }
  return detail::lift_tc_stream(c, m, kind);
}

}  // namespace mcut
