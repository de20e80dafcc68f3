#pragma once

// Reference implementations used only by the tests. They scan every
// bipartition of the whole vertex set and share no code with the library
// enumerators.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "mcut/enumerate.hpp"
#include "mcut/graph.hpp"

namespace mcut::testing {

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return build_graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
  return build_graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return build_graph(n, e);
}

inline Graph star_graph(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return build_graph(leaves + 1, e);
}

inline Graph from_edges(int n, std::vector<std::pair<int, int>> pairs) {
  std::vector<Edge> e;
  for (auto [a, b] : pairs) e.push_back(make_edge(a, b));
  return build_graph(n, e);
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.push_back({i, j});
  return build_graph(n, e);
}

inline Graph random_tree(int n, std::mt19937_64& rng) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> pick(0, v - 1);
    e.push_back({pick(rng), v});
  }
  return build_graph(n, e);
}

// All matching cuts by scanning every ordered bipartition (A, B), A and B nonempty.
inline std::set<Cut> brute_cuts(const Graph& g) {
  std::set<Cut> out;
  const int n = g.n();
  if (n < 2) return out;
  for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
    std::vector<int> hits(static_cast<std::size_t>(n), 0);
    std::vector<Edge> cut;
    for (const Edge& e : g.edges())
      if (((mask >> e.u) ^ (mask >> e.v)) & 1u) {
        cut.push_back(e);
        ++hits[e.u];
        ++hits[e.v];
      }
    bool matching = true;
    for (int h : hits) matching = matching && h <= 1;
    if (matching) out.insert(Cut(cut));
  }
  return out;
}

inline std::set<Cut> brute_cuts(const Graph& g, Kind kind) {
  std::set<Cut> all = brute_cuts(g);
  if (kind == Kind::All) return all;
  std::set<Cut> out;
  for (const Cut& c : all) {
    bool keep = true;
    for (const Cut& d : all) {
      if (d == c) continue;
      if (kind == Kind::Minimal ? d.subset_of(c) : c.subset_of(d)) keep = false;
    }
    if (keep) out.insert(c);
  }
  return out;
}

inline std::set<Cut> as_set(const std::vector<Cut>& v) { return {v.begin(), v.end()}; }

inline std::uint64_t count_nonempty_matchings(const Graph& g) {
  std::uint64_t count = 0;
  const auto m = g.m();
  for (std::uint64_t mask = 1; mask < (1ull << m); ++mask) {
    std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      if (mask >> i & 1u) {
        const Edge& e = g.edges()[i];
        ok = ++deg[e.u] == 1 && ++deg[e.v] == 1;
      }
    if (ok) ++count;
  }
  return count;
}

}  // namespace mcut::testing
