#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "enumerate.hpp"
#include "graph.hpp"
#include "kernel_vc.hpp"
#include "parameters.hpp"
#include "pendant_lift.hpp"

namespace mcut {

enum class PathRole { XEdge, SecondX, Middle, SecondY, YEdge };

// A maximal path of T = G' - S between two X vertices whose interior avoids X.
// Only paths of length >= 2 are recorded; single edges between X vertices stay
// in G[X]. Edges are in host coordinates; the contracted H edge joins two kept
// interior vertices and is not an edge of G.
struct PathRecord {
  Vertex x = -1, y = -1;            // x < y
  std::vector<Vertex> g_vertices;   // x = p0, ..., pL = y
  std::vector<Edge> h_edges;        // path order in H
  std::vector<PathRole> h_roles;

  int length() const { return static_cast<int>(g_vertices.size()) - 1; }
  Edge g_edge(int i) const { return make_edge(g_vertices[static_cast<std::size_t>(i)], g_vertices[static_cast<std::size_t>(i) + 1]); }
  std::vector<Edge> g_edges() const {
    std::vector<Edge> out;
    for (int i = 0; i < length(); ++i) out.push_back(g_edge(i));
    return out;
  }
  bool contracted() const { return static_cast<int>(h_edges.size()) < length(); }
};

enum class FenTrivial {
  None,
  Identity,     // K1 or the empty graph
  EmptyOnly,    // minimal kind, disconnected: 2K1 whose only cut is empty
  TreeSingles,  // minimal kind, tree: K2 whose cut lifts to every single edge
  ForestAll,    // all kind, forest: 2K1 whose empty cut lifts to every matching cut
};

struct FenContext {
  Kind kind = Kind::Minimal;
  FenTrivial trivial = FenTrivial::None;
  Cut s;
  std::optional<Vertex> u_star, v_star;
  std::optional<Edge> e_star;
  std::vector<char> in_gprime;  // host vertices surviving the stripping
  Cut gprime_edges;
  Graph f;                      // host vertex ids, edges E(G) - E(G')
  VertexSet x;
  std::vector<PathRecord> paths;
  std::map<Edge, std::size_t> path_of_h_edge;  // host coordinates
  PendantClasses middles;       // minimal kind: H middle edge -> middle edges of G
  Graph h;
  bool h_connected = true;
  std::vector<Vertex> to_host;
};

struct FenKernel {
  Graph h;
  FenContext ctx;
};

namespace detail {

inline void require_feedback_edge_set(const Graph& g, const Cut& s) {
  require_subset(g, s);
  const Graph rest = remove_edges(g, s);
  if (!is_forest(rest)) throw std::invalid_argument("edge set leaves a cycle");
  const std::size_t minimum = g.m() - static_cast<std::size_t>(g.n()) + static_cast<std::size_t>(component_count(g));
  if (s.size() != minimum) throw std::invalid_argument("feedback edge set is not minimum");
}

inline std::vector<PathRole> path_roles(int h_length, Kind kind) {
  std::vector<PathRole> out;
  for (int i = 0; i < h_length; ++i) {
    if (i == 0) {
      out.push_back(PathRole::XEdge);
    } else if (i == h_length - 1) {
      out.push_back(PathRole::YEdge);
    } else if (kind == Kind::All && i == 1) {
      out.push_back(PathRole::SecondX);
    } else if (kind == Kind::All && i == h_length - 2) {
      out.push_back(PathRole::SecondY);
    } else {
      out.push_back(PathRole::Middle);
    }
  }
  return out;
}

}  // namespace detail

inline FenContext build_fen_context(const Graph& g, const Cut& s, Kind kind) {
  if (kind != Kind::Minimal && kind != Kind::All) throw std::invalid_argument("fen kernels exist for minimal and all only");
  detail::require_feedback_edge_set(g, s);
  const int n = g.n();
  FenContext c;
  c.kind = kind;
  c.s = s;

  int ncomp = 0;
  const std::vector<int> comp = component_ids(g, &ncomp);
  std::vector<std::size_t> cv(static_cast<std::size_t>(ncomp), 0), ce(static_cast<std::size_t>(ncomp), 0);
  for (Vertex v = 0; v < n; ++v) ++cv[static_cast<std::size_t>(comp[v])];
  for (const Edge& e : g.edges()) ++ce[static_cast<std::size_t>(comp[e.u])];
  auto tree = [&](Vertex v) {
    const auto i = static_cast<std::size_t>(comp[v]);
    return ce[i] + 1 == cv[i];
  };
  for (Vertex v = 0; v < n && !c.u_star; ++v)
    if (g.degree(v) == 1 && !tree(v)) {
      c.u_star = v;
      c.e_star = make_edge(v, g.neighbors(v)[0]);
    }
  if (kind == Kind::All)
    for (Vertex v = 0; v < n && !c.v_star; ++v)
      if (tree(v)) c.v_star = v;

  // Strip vertices of degree at most one, sparing u* and v*.
  c.in_gprime.assign(static_cast<std::size_t>(n), 1);
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<Vertex> queue;
  auto spared = [&](Vertex v) { return v == c.u_star || v == c.v_star; };
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1 && !spared(v)) queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    if (!c.in_gprime[v]) continue;
    c.in_gprime[v] = 0;
    for (Vertex w : g.neighbors(v))
      if (c.in_gprime[w] && --deg[w] <= 1 && !spared(w)) queue.push_back(w);
  }
  std::vector<Edge> kept, stripped;
  for (const Edge& e : g.edges()) (c.in_gprime[e.u] && c.in_gprime[e.v] ? kept : stripped).push_back(e);
  c.gprime_edges = Cut(kept);
  c.f = build_graph(n, stripped);

  // X and the paths of T.
  const Graph t = build_graph(n, cut_minus(c.gprime_edges, s).edges());
  std::vector<char> in_x(static_cast<std::size_t>(n), 0);
  for (const Edge& e : s) in_x[e.u] = in_x[e.v] = 1;
  for (Vertex v = 0; v < n; ++v)
    if (c.in_gprime[v] && t.degree(v) != 2) in_x[v] = 1;
  for (Vertex v = 0; v < n; ++v)
    if (in_x[v]) c.x.push_back(v);

  std::vector<char> dropped(static_cast<std::size_t>(n), 0);
  std::vector<Edge> added;
  const int long_from = kind == Kind::Minimal ? 4 : 6;
  const int keep_ends = kind == Kind::Minimal ? 1 : 2;  // kept interior vertices at each end
  for (Vertex x : c.x)
    for (Vertex w : t.neighbors(x)) {
      PathRecord p;
      p.g_vertices = {x, w};
      Vertex prev = x, cur = w;
      while (!in_x[cur]) {
        const auto& nb = t.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        p.g_vertices.push_back(cur);
      }
      if (p.length() < 2 || x > cur) continue;
      p.x = x;
      p.y = cur;
      const int len = p.length();
      if (len >= long_from) {
        const auto& pv = p.g_vertices;
        for (int i = 0; i < keep_ends; ++i) p.h_edges.push_back(p.g_edge(i));
        const Edge shortcut = make_edge(pv[static_cast<std::size_t>(keep_ends)], pv[static_cast<std::size_t>(len - keep_ends)]);
        p.h_edges.push_back(shortcut);
        added.push_back(shortcut);
        for (int i = len - keep_ends; i < len; ++i) p.h_edges.push_back(p.g_edge(i));
        for (int i = keep_ends + 1; i < len - keep_ends; ++i) dropped[pv[static_cast<std::size_t>(i)]] = 1;
      } else {
        p.h_edges = p.g_edges();
      }
      p.h_roles = detail::path_roles(static_cast<int>(p.h_edges.size()), kind);
      c.paths.push_back(std::move(p));
    }
  std::sort(c.paths.begin(), c.paths.end(),
            [](const PathRecord& a, const PathRecord& b) { return a.g_vertices < b.g_vertices; });
  for (std::size_t i = 0; i < c.paths.size(); ++i) {
    const PathRecord& p = c.paths[i];
    for (const Edge& e : p.h_edges) c.path_of_h_edge[e] = i;
    if (kind == Kind::Minimal && p.h_edges.size() == 3) {
      std::vector<Edge> mids;
      for (int j = 1; j + 1 < p.length(); ++j) mids.push_back(p.g_edge(j));
      // The designated edge is the H middle edge, which add() would not pick.
      c.middles.classes[p.g_vertices[1]] = std::move(mids);
      c.middles.designated[p.h_edges[1]] = p.g_vertices[1];
    }
  }

  VertexSet keep;
  for (Vertex v = 0; v < n; ++v)
    if (c.in_gprime[v] && !dropped[v]) keep.push_back(v);
  std::vector<Vertex> from(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) from[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> he;
  for (const Edge& e : c.gprime_edges)
    if (!dropped[e.u] && !dropped[e.v]) he.push_back({from[e.u], from[e.v]});
  for (const Edge& e : added) he.push_back(make_edge(from[e.u], from[e.v]));
  c.h = build_graph(static_cast<int>(keep.size()), he);
  c.h_connected = is_connected(c.h);
  c.to_host = std::move(keep);
  return c;
}

inline FenKernel kernelize_fen(const Graph& g, Kind kind) {
  if (kind != Kind::Minimal && kind != Kind::All) throw std::invalid_argument("fen kernels exist for minimal and all only");
  FenContext c;
  c.kind = kind;
  const int n = g.n();
  auto trivial = [&](FenTrivial t, Graph h, std::vector<Vertex> to_host) {
    c.trivial = t;
    c.f = g;
    c.h = std::move(h);
    c.h_connected = is_connected(c.h);
    c.to_host = std::move(to_host);
    return FenKernel{c.h, c};
  };
  if (n <= 1) {
    std::vector<Vertex> id;
    for (Vertex v = 0; v < n; ++v) id.push_back(v);
    return trivial(FenTrivial::Identity, g, id);
  }
  const bool connected = is_connected(g);
  if (kind == Kind::Minimal && !connected) {
    auto comps = components(g);
    return trivial(FenTrivial::EmptyOnly, edgeless_graph(2), {comps[0][0], comps[1][0]});
  }
  if (kind == Kind::Minimal && is_forest(g)) {
    const Edge e = g.edges().front();
    return trivial(FenTrivial::TreeSingles, build_graph(2, {{0, 1}}), {e.u, e.v});
  }
  if (kind == Kind::All && is_forest(g)) return trivial(FenTrivial::ForestAll, edgeless_graph(2), {0, 1});
  FenContext built = build_fen_context(g, feedback_edge_set(g), kind);
  return FenKernel{built.h, std::move(built)};
}

inline bool fen_within_bound(const FenKernel& k) {
  const auto n = static_cast<std::size_t>(k.h.n());
  if (k.ctx.trivial != FenTrivial::None) return n <= 2;
  const std::size_t s = k.ctx.s.size();
  return k.ctx.kind == Kind::Minimal ? n <= 10 * s : n <= 20 * s + 1;
}

namespace detail {

inline CutStream fen_minimal_stream(const FenContext& c, Cut hm) {
  switch (c.trivial) {
    case FenTrivial::Identity:
    case FenTrivial::EmptyOnly:
      co_yield hm;
      co_return;
    case FenTrivial::TreeSingles:
      for (const Edge& e : c.f.edges()) co_yield Cut{e};
      co_return;
    default:
      break;
  }
  if (c.e_star && hm == Cut{*c.e_star}) {
    co_yield hm;
    for (const Edge& e : c.f.edges()) co_yield Cut{e};
    co_return;
  }
  if (hm.size() == 2) {
    auto a = c.path_of_h_edge.find(hm[0]), b = c.path_of_h_edge.find(hm[1]);
    if (a != c.path_of_h_edge.end() && b != c.path_of_h_edge.end() && a->second == b->second) {
      const PathRecord& p = c.paths[a->second];
      if (p.h_edges.size() == 3 && hm == Cut{p.h_edges[0], p.h_edges[2]}) {
        for (int i = 0; i < p.length(); ++i)
          for (int j = i + 2; j < p.length(); ++j) co_yield Cut{p.g_edge(i), p.g_edge(j)};
        co_return;
      }
    }
  }
  for (const Cut& cut : lift_pendant(c.middles, hm)) co_yield cut;
}

struct PathJob {
  const PathRecord* path;
  Graph local;  // the path p0..pL on vertices 0..L
  MatchingConstraints constraints;
};

inline PathJob make_path_job(const PathRecord& p, const Cut& hm) {
  const int len = p.length();
  std::vector<Edge> le;
  for (int i = 0; i < len; ++i) le.push_back({i, i + 1});
  PathJob job{&p, build_graph(len + 1, le), {}};
  auto in = [&](std::size_t i) { return hm.contains(p.h_edges[i]); };
  std::vector<Edge> forced, forbidden, coupled;
  const Edge gx{0, 1}, gx2{1, 2}, gy2{len - 2, len - 1}, gy{len - 1, len};
  (in(0) ? forced : forbidden).push_back(gx);
  (in(4) ? forced : forbidden).push_back(gy);
  const int inner = static_cast<int>(in(1)) + static_cast<int>(in(2)) + static_cast<int>(in(3));
  if (inner == 1) {
    if (in(1)) {
      forced.push_back(gx2);
      forbidden.push_back(gy2);
    } else if (in(3)) {
      forced.push_back(gy2);
      forbidden.push_back(gx2);
    } else {
      coupled = {gx2, gy2};
    }
  }
  int count = 0;
  for (std::size_t i = 0; i < 5; ++i) count += static_cast<int>(in(i));
  job.constraints = {Cut(forced), Cut(forbidden), Cut(coupled), count % 2, true};
  return job;
}

// Every matching of F avoiding the vertices of m, added to m.
inline CutStream fen_match_f(const Graph& f, Cut m) {
  std::vector<char> touched(static_cast<std::size_t>(f.n()), 0);
  for (const Edge& e : m) touched[e.u] = touched[e.v] = 1;
  std::vector<Edge> blocked;
  for (const Edge& e : f.edges())
    if (touched[e.u] || touched[e.v]) blocked.push_back(e);
  MatchingConstraints mc;
  mc.forbidden = Cut(blocked);
  for (const Cut& extra : enum_forest_matchings(f, mc)) co_yield cut_union(m, extra);
}

inline CutStream fen_equivalent(const FenContext& c, const std::vector<PathJob>& jobs, std::size_t i, Cut acc) {
  if (i == jobs.size()) {
    for (const Cut& cut : fen_match_f(c.f, acc)) co_yield cut;
    co_return;
  }
  const PathJob& job = jobs[i];
  for (const Cut& local : enum_forest_matchings(job.local, job.constraints)) {
    std::vector<Edge> z;
    for (const Edge& e : local) z.push_back(job.path->g_edge(e.u));
    for (const Cut& cut : fen_equivalent(c, jobs, i + 1, cut_union(acc, Cut(std::move(z))))) co_yield cut;
  }
}

inline CutStream fen_all_stream(const FenContext& c, Cut hm) {
  MatchingConstraints nonempty;
  nonempty.require_nonempty = true;
  switch (c.trivial) {
    case FenTrivial::Identity:
      co_yield hm;
      co_return;
    case FenTrivial::ForestAll: {
      MatchingConstraints mc;
      mc.require_nonempty = is_connected(c.f);
      for (const Cut& cut : enum_forest_matchings(c.f, mc)) co_yield cut;
      co_return;
    }
    default:
      break;
  }
  if (hm.empty()) {
    co_yield hm;
    for (const Cut& cut : enum_forest_matchings(c.f, nonempty)) co_yield cut;
    co_return;
  }
  std::vector<Edge> fixed;
  std::vector<std::size_t> touched;
  for (const Edge& e : hm) {
    auto it = c.path_of_h_edge.find(e);
    if (it != c.path_of_h_edge.end() && c.paths[it->second].contracted()) {
      touched.push_back(it->second);
    } else {
      fixed.push_back(e);
    }
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  std::vector<PathJob> jobs;
  for (std::size_t i : touched) jobs.push_back(make_path_job(c.paths[i], hm));
  for (const Cut& cut : fen_equivalent(c, jobs, 0, Cut(fixed))) co_yield cut;
  if (c.h_connected && c.e_star && hm == Cut{*c.e_star})
    for (const Cut& cut : enum_forest_matchings(c.f, nonempty)) co_yield cut;
}

inline void require_minimal_cut(const Graph& h, const Cut& m) {
  require_cut(h, m);
  if (m.size() < 2) return;
  for (const Edge& e : m)
    if (is_matching_cut(h, Cut{e})) throw std::invalid_argument("not a minimal matching cut of the kernel: " + to_string(m));
}

}  // namespace detail

// The context must outlive the returned streams.
inline CutStream lift_fen_minimal(const Graph& /*g*/, const FenContext& c, const Cut& m) {
  if (c.kind != Kind::Minimal) throw std::invalid_argument("context was built for all cuts");
  detail::require_minimal_cut(c.h, m);
  return detail::fen_minimal_stream(c, map_cut(m, c.to_host));
}

inline CutStream lift_fen_all(const Graph& /*g*/, const FenContext& c, const Cut& m) {
  if (c.kind != Kind::All) throw std::invalid_argument("context was built for minimal cuts");
  require_cut(c.h, m);
  return detail::fen_all_stream(c, map_cut(m, c.to_host));
}

inline CutStream lift_fen(const Graph& g, const FenContext& c, const Cut& m) {
  return c.kind == Kind::Minimal ? lift_fen_minimal(g, c, m) : lift_fen_all(g, c, m);
}

}  // namespace mcut
