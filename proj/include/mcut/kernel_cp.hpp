#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "enumerate.hpp"
#include "graph.hpp"
#include "kernel_vc.hpp"
#include "parameters.hpp"

namespace mcut {

struct CpContext {
  VertexClassPartition original;  // as supplied
  VertexClassPartition qhat;      // after splitting and gluing, host coordinates
  std::vector<int> merge;         // original block -> qhat block holding its first vertex
  std::vector<int> clique_of_host;  // host vertex -> qhat block
  Graph ghat;                     // G plus the glue edges
  std::vector<Edge> glue_added;   // host coordinates, edges not in G
  VertexSet marked;               // host coordinates
  VertexClassPartition qtilde;    // kernel coordinates, parallel to qhat
  std::vector<int> clique_of_kernel;
  Graph h;
  std::vector<Vertex> to_host;
};

struct CpKernel {
  Graph h;
  CpContext ctx;
};

inline std::size_t cp_size_bound(std::size_t k) { return 4 * k * (3 * k * k - 2 * k + 1); }

inline bool cp_within_bound(const CpKernel& k) {
  return static_cast<std::size_t>(k.h.n()) <= cp_size_bound(k.ctx.original.size());
}

namespace detail {

inline void require_clique_partition(const Graph& g, const VertexClassPartition& q) {
  block_index(g.n(), q);
  for (const VertexSet& b : q.blocks)
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = i + 1; j < b.size(); ++j)
        if (!g.has_edge(b[i], b[j])) throw std::invalid_argument("block is not a clique: " + to_string(make_edge(b[i], b[j])));
}

// Crossing edges between two blocks, in canonical order.
inline std::vector<Edge> crossing(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::vector<Edge> out;
  for (Vertex u : a)
    for (Vertex v : b)
      if (g.has_edge(u, v)) out.push_back(make_edge(u, v));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool edges_form_matching(const std::vector<Edge>& es) {
  std::set<Vertex> seen;
  for (const Edge& e : es)
    if (!seen.insert(e.u).second || !seen.insert(e.v).second) return false;
  return true;
}

}  // namespace detail

inline CpKernel kernelize_cp(const Graph& g, const VertexClassPartition& q) {
  detail::require_clique_partition(g, q);
  CpKernel k;
  CpContext& c = k.ctx;
  c.original = q;
  const int n = g.n();

  // Split cliques of size two.
  std::vector<VertexSet> blocks;
  for (const VertexSet& b : q.blocks) {
    if (b.size() == 2) {
      blocks.push_back({b[0]});
      blocks.push_back({b[1]});
    } else {
      blocks.push_back(b);
    }
  }
  VertexClassPartition cur = sorted_partition(blocks);

  // Glue the lowest offending pair until none is left.
  std::set<Edge> edges(g.edges().begin(), g.edges().end());
  Graph work = g;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < cur.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < cur.size() && !changed; ++j) {
        auto cross = detail::crossing(work, cur.blocks[i], cur.blocks[j]);
        if (cross.empty() || detail::edges_form_matching(cross)) continue;
        for (Vertex u : cur.blocks[i])
          for (Vertex v : cur.blocks[j])
            if (edges.insert(make_edge(u, v)).second) c.glue_added.push_back(make_edge(u, v));
        std::vector<VertexSet> next;
        for (std::size_t b = 0; b < cur.size(); ++b)
          if (b != i && b != j) next.push_back(cur.blocks[b]);
        VertexSet merged = cur.blocks[i];
        merged.insert(merged.end(), cur.blocks[j].begin(), cur.blocks[j].end());
        next.push_back(merged);
        cur = sorted_partition(next);
        work = build_graph(n, std::vector<Edge>(edges.begin(), edges.end()));
        changed = true;
      }
  }
  std::sort(c.glue_added.begin(), c.glue_added.end());
  c.ghat = work;
  c.qhat = cur;
  c.clique_of_host = block_index(n, c.qhat);
  for (const VertexSet& b : q.blocks) c.merge.push_back(c.clique_of_host[b[0]]);

  // Marking.
  const std::size_t r = c.qhat.size();
  std::set<Vertex> marked;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j) {
      auto cross = detail::crossing(work, c.qhat.blocks[i], c.qhat.blocks[j]);
      if (cross.empty()) continue;
      marked.insert(cross.front().u);
      marked.insert(cross.front().v);
    }
  for (std::size_t h = 0; h < r; ++h)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        if (i == h || j == h) continue;
        for (Vertex u : c.qhat.blocks[h]) {
          Vertex x = -1, y = -1;
          for (Vertex w : work.neighbors(u)) {
            if (x < 0 && c.clique_of_host[w] == static_cast<int>(i)) x = w;
            if (y < 0 && c.clique_of_host[w] == static_cast<int>(j)) y = w;
          }
          if (x < 0 || y < 0) continue;
          marked.insert({u, x, y});
          break;
        }
      }
  c.marked.assign(marked.begin(), marked.end());

  // Drop the highest unmarked vertices, keeping at least three per clique.
  VertexSet keep;
  for (const VertexSet& b : c.qhat.blocks) {
    if (b.size() < 3) {
      keep.insert(keep.end(), b.begin(), b.end());
      continue;
    }
    std::size_t unmarked = 0;
    for (Vertex v : b) unmarked += !marked.count(v);
    std::size_t drop = std::min(unmarked, b.size() - 3);
    for (auto it = b.rbegin(); it != b.rend(); ++it) {
      if (drop > 0 && !marked.count(*it)) {
        --drop;
        continue;
      }
      keep.push_back(*it);
    }
  }
  std::sort(keep.begin(), keep.end());
  auto sub = induced_subgraph(work, keep);
  k.h = std::move(sub.graph);
  c.to_host = std::move(sub.to_host);
  std::vector<VertexSet> tilde(r);
  for (Vertex i = 0; i < k.h.n(); ++i) {
    int b = c.clique_of_host[c.to_host[i]];
    tilde[static_cast<std::size_t>(b)].push_back(i);
    c.clique_of_kernel.push_back(b);
  }
  c.qtilde.blocks = std::move(tilde);
  c.h = k.h;
  return k;
}

namespace detail {

// Host cut between the full cliques, given a side per kernel vertex.
inline Cut cp_host_cut(const Graph& g, const CpContext& c, const std::vector<char>& kernel_side) {
  std::vector<char> clique_side(c.qhat.size(), 0);
  for (Vertex v = 0; v < c.h.n(); ++v) clique_side[static_cast<std::size_t>(c.clique_of_kernel[v])] = kernel_side[v];
  std::vector<char> side(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v = 0; v < g.n(); ++v) side[v] = clique_side[static_cast<std::size_t>(c.clique_of_host[v])];
  return edge_cut(g, side);
}

}  // namespace detail

// Cliques lie on one side of every matching cut, so the kernel cut fixes a
// side per clique.
inline Cut lift_cp(const Graph& g, const CpContext& c, const Cut& m) {
  require_cut(c.h, m);
  auto sides = cut_sides(c.h, m);
  std::vector<char> kernel_side(static_cast<std::size_t>(c.h.n()), 0);
  for (Vertex v : sides->a) kernel_side[v] = 1;
  return detail::cp_host_cut(g, c, kernel_side);
}

}  // namespace mcut
