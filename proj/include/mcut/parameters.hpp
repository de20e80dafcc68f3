#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace mcut {

enum class ModuleKind { Clique, Independent, Unknown };

struct VertexClassPartition {
  std::vector<VertexSet> blocks;
  std::vector<ModuleKind> kinds;  // parallel to blocks; may be empty when untagged

  std::size_t size() const { return blocks.size(); }
  ModuleKind kind(std::size_t i) const { return i < kinds.size() ? kinds[i] : ModuleKind::Unknown; }
};

// Block index per vertex. Throws unless the blocks partition 0..n-1.
inline std::vector<int> block_index(int n, const VertexClassPartition& p) {
  std::vector<int> idx(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    if (p.blocks[b].empty()) throw std::invalid_argument("partition has an empty block");
    for (Vertex v : p.blocks[b]) {
      if (v < 0 || v >= n) throw std::invalid_argument("partition vertex " + std::to_string(v) + " out of range");
      if (idx[v] != -1) throw std::invalid_argument("vertex " + std::to_string(v) + " appears in two blocks");
      idx[v] = static_cast<int>(b);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (idx[v] == -1) throw std::invalid_argument("vertex " + std::to_string(v) + " is in no block");
  return idx;
}

inline VertexClassPartition sorted_partition(std::vector<VertexSet> blocks, std::vector<ModuleKind> kinds = {}) {
  std::vector<std::size_t> order(blocks.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::sort(blocks[i].begin(), blocks[i].end());
    order[i] = i;
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return blocks[a] < blocks[b]; });
  VertexClassPartition p;
  for (std::size_t i : order) {
    p.blocks.push_back(std::move(blocks[i]));
    if (!kinds.empty()) p.kinds.push_back(kinds[i]);
  }
  return p;
}

// End-vertices of a greedy maximal matching in canonical edge order.
inline VertexSet vc_2approx(const Graph& g) {
  std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
  VertexSet out;
  for (const Edge& e : g.edges())
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      out.push_back(e.u);
      out.push_back(e.v);
    }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_vertex_cover(const Graph& g, const VertexSet& x) {
  for (const Edge& e : g.edges())
    if (!std::binary_search(x.begin(), x.end(), e.u) && !std::binary_search(x.begin(), x.end(), e.v))
      return false;
  return true;
}

enum class TwinMode { TrueTwin, Neighborhood };

inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet s = g.neighbors(v);
  s.insert(std::lower_bound(s.begin(), s.end(), v), v);
  return s;
}

inline VertexClassPartition twin_classes(const Graph& g, TwinMode mode) {
  std::map<VertexSet, VertexSet> closed;
  for (Vertex v = 0; v < g.n(); ++v) closed[closed_neighborhood(g, v)].push_back(v);
  std::vector<VertexSet> blocks;
  std::vector<ModuleKind> kinds;
  std::map<VertexSet, VertexSet> open;
  for (auto& [key, members] : closed) {
    if (mode == TwinMode::TrueTwin || members.size() > 1) {
      blocks.push_back(members);
      kinds.push_back(ModuleKind::Clique);
    } else {
      open[g.neighbors(members[0])].push_back(members[0]);
    }
  }
  for (auto& [key, members] : open) {
    kinds.push_back(members.size() > 1 ? ModuleKind::Independent : ModuleKind::Clique);
    blocks.push_back(members);
  }
  return sorted_partition(std::move(blocks), std::move(kinds));
}

struct Quotient {
  Graph graph;
  std::vector<int> block_of;  // vertex -> block index
};

// Blocks are assumed to be modules, so one crossing edge decides adjacency.
inline Quotient quotient_graph(const Graph& g, const VertexClassPartition& p) {
  Quotient q;
  q.block_of = block_index(g.n(), p);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (q.block_of[e.u] != q.block_of[e.v]) edges.push_back(make_edge(q.block_of[e.u], q.block_of[e.v]));
  q.graph = build_graph(static_cast<int>(p.blocks.size()), edges);
  return q;
}

inline Cut feedback_edge_set(const Graph& g) { return cut_minus(Cut(g.edges()), spanning_forest(g)); }

inline bool is_module(const Graph& g, const VertexSet& s) {
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (Vertex v : s) in[v] = 1;
  for (Vertex z = 0; z < g.n(); ++z) {
    if (in[z]) continue;
    std::size_t hits = 0;
    for (Vertex w : g.neighbors(z)) hits += in[w] ? 1 : 0;
    if (hits != 0 && hits != s.size()) return false;
  }
  return true;
}

namespace detail {

// Smallest module containing both u and v: keep absorbing splitters.
inline std::vector<char> module_closure(const Graph& g, const std::vector<std::vector<char>>& adj, Vertex u,
                                        Vertex v) {
  const int n = g.n();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  in[u] = in[v] = 1;
  std::vector<Vertex> members{u, v};
  bool grew = true;
  while (grew) {
    grew = false;
    for (Vertex z = 0; z < n; ++z) {
      if (in[z]) continue;
      bool some = false, all = true;
      for (Vertex w : members) {
        if (adj[z][w]) some = true;
        else all = false;
      }
      if (some && !all) {
        in[z] = 1;
        members.push_back(z);
        grew = true;
      }
    }
  }
  return in;
}

inline std::vector<VertexSet> complement_components(const Graph& g) {
  const int n = g.n();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = static_cast<int>(out.size());
    VertexSet members{s};
    for (std::size_t i = 0; i < members.size(); ++i) {
      Vertex v = members[i];
      for (Vertex w = 0; w < n; ++w)
        if (w != v && comp[w] == -1 && !g.has_edge(v, w)) {
          comp[w] = comp[s];
          members.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

}  // namespace detail

// Top-level modular partition: components for disconnected graphs,
// co-components when the complement is disconnected, and the maximal proper
// modules of a prime quotient otherwise.
inline VertexClassPartition modular_partition(const Graph& g,
                                              const std::optional<VertexClassPartition>& supplied = std::nullopt) {
  if (supplied) {
    block_index(g.n(), *supplied);
    for (const auto& b : supplied->blocks)
      if (!is_module(g, b)) throw std::invalid_argument("supplied block is not a module");
    return *supplied;
  }
  const int n = g.n();
  if (n < 2) return sorted_partition(n == 1 ? std::vector<VertexSet>{{0}} : std::vector<VertexSet>{});
  if (!is_connected(g)) return sorted_partition(components(g));
  auto co = detail::complement_components(g);
  if (co.size() > 1) return sorted_partition(std::move(co));
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  for (const Edge& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  DisjointSets ds(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (ds.find(u) == ds.find(v)) continue;
      auto in = detail::module_closure(g, adj, u, v);
      if (std::count(in.begin(), in.end(), 1) == n) continue;
      for (Vertex w = 0; w < n; ++w)
        if (in[w]) ds.unite(u, w);
    }
  std::map<int, VertexSet> groups;
  for (Vertex v = 0; v < n; ++v) groups[ds.find(v)].push_back(v);
  std::vector<VertexSet> blocks;
  for (auto& [root, members] : groups) blocks.push_back(members);
  return sorted_partition(std::move(blocks));
}

}  // namespace mcut
