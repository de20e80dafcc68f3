#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcut {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

inline std::string to_string(Edge e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

// Edge set in canonical order. Used for matchings, cuts and forests alike.
class Cut {
 public:
  Cut() = default;
  Cut(std::initializer_list<Edge> edges) : Cut(std::vector<Edge>(edges)) {}
  explicit Cut(std::vector<Edge> edges) : edges_(std::move(edges)) {
    for (Edge& e : edges_) e = make_edge(e.u, e.v);
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }
  const Edge& operator[](std::size_t i) const { return edges_[i]; }

  bool contains(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(e.u, e.v));
  }
  // Proper or equal subset.
  bool subset_of(const Cut& other) const {
    return std::includes(other.edges_.begin(), other.edges_.end(), edges_.begin(), edges_.end());
  }

  auto operator<=>(const Cut&) const = default;

 private:
  std::vector<Edge> edges_;
};

inline Cut cut_union(const Cut& a, const Cut& b) {
  std::vector<Edge> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Cut(std::move(out));
}

inline Cut cut_minus(const Cut& a, const Cut& b) {
  std::vector<Edge> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Cut(std::move(out));
}

inline std::string to_string(const Cut& c) {
  if (c.empty()) return "EMPTY";
  std::string s;
  for (const Edge& e : c) {
    if (!s.empty()) s += ' ';
    s += to_string(e);
  }
  return s;
}

class Graph {
 public:
  Graph() = default;

  int n() const { return static_cast<int>(adj_.size()); }
  std::size_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n() || b >= n() || a == b) return false;
    const auto& nb = neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  }
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && n() == other.n(); }

  friend Graph build_graph(int n, const std::vector<Edge>& edges);

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

inline Graph build_graph(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw std::invalid_argument("edge " + to_string(e) + " has an endpoint outside 0.." +
                                  std::to_string(n - 1));
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    canon.push_back(make_edge(e.u, e.v));
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  for (const Edge& e : canon) {
    g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  g.edges_ = std::move(canon);
  return g;
}

inline Graph edgeless_graph(int n) { return build_graph(n, {}); }

// Union-find with path halving; small helper shared by several modules.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Component id per vertex, ids assigned in order of lowest member.
inline std::vector<int> component_ids(const Graph& g, int* count = nullptr) {
  std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
  int c = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (comp[w] == -1) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

inline std::vector<VertexSet> components(const Graph& g) {
  int count = 0;
  auto comp = component_ids(g, &count);
  std::vector<VertexSet> out(static_cast<std::size_t>(count));
  for (Vertex v = 0; v < g.n(); ++v) out[comp[v]].push_back(v);
  return out;
}

inline int component_count(const Graph& g) {
  int count = 0;
  component_ids(g, &count);
  return count;
}

inline bool is_connected(const Graph& g) { return component_count(g) <= 1; }

// Induced subgraph on a sorted vertex set; vertices keep their relative order.
// map[i] is the host vertex of subgraph vertex i.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_host;
  std::vector<Vertex> from_host;  // -1 when absent
};

inline Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  Subgraph s;
  s.to_host = keep;
  s.from_host.assign(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) s.from_host[keep[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (s.from_host[e.u] >= 0 && s.from_host[e.v] >= 0)
      edges.push_back({s.from_host[e.u], s.from_host[e.v]});
  s.graph = build_graph(static_cast<int>(keep.size()), edges);
  return s;
}

inline Cut map_cut(const Cut& c, const std::vector<Vertex>& map) {
  std::vector<Edge> out;
  out.reserve(c.size());
  for (const Edge& e : c) out.push_back(make_edge(map[e.u], map[e.v]));
  return Cut(std::move(out));
}

inline void require_subset(const Graph& g, const Cut& m) {
  for (const Edge& e : m)
    if (!g.has_edge(e)) throw std::invalid_argument("edge " + to_string(e) + " is not in the graph");
}

inline bool is_matching(const Graph& g, const Cut& m) {
  require_subset(g, m);
  std::vector<char> used(static_cast<std::size_t>(g.n()), 0);
  for (const Edge& e : m) {
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

// E(A,B) for side labels (0 = A, 1 = B).
inline Cut edge_cut(const Graph& g, const std::vector<char>& side) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (side[e.u] != side[e.v]) out.push_back(e);
  return Cut(std::move(out));
}

namespace detail {

// 2-colouring of the components of G-M linked by the edges of M.
// Returns the side per vertex, or nullopt if M is not a matching cut.
inline std::optional<std::vector<char>> cut_coloring(const Graph& g, const Cut& m) {
  if (!is_matching(g, m)) return std::nullopt;
  const int n = g.n();
  if (m.empty()) {
    int count = 0;
    auto comp = component_ids(g, &count);
    if (count < 2) return std::nullopt;
    std::vector<char> side(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) side[v] = comp[v] == 0 ? 0 : 1;
    return side;
  }
  DisjointSets ds(n);
  for (const Edge& e : g.edges())
    if (!m.contains(e)) ds.unite(e.u, e.v);
  std::vector<std::vector<int>> links(static_cast<std::size_t>(n));
  for (const Edge& e : m) {
    int a = ds.find(e.u), b = ds.find(e.v);
    if (a == b) return std::nullopt;
    links[a].push_back(b);
    links[b].push_back(a);
  }
  // Roots are the lowest vertex of their component, so scanning vertices in
  // order reaches every block through its lowest vertex first.
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> stack;
  for (Vertex v = 0; v < n; ++v) {
    int r = ds.find(v);
    if (color[r] != -1) continue;
    color[r] = 0;
    stack.push_back(r);
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int d : links[c]) {
        if (color[d] == -1) {
          color[d] = 1 - color[c];
          stack.push_back(d);
        } else if (color[d] == color[c]) {
          return std::nullopt;
        }
      }
    }
  }
  std::vector<char> side(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) side[v] = static_cast<char>(color[ds.find(v)]);
  return side;
}

}  // namespace detail

inline bool is_matching_cut(const Graph& g, const Cut& m) {
  return detail::cut_coloring(g, m).has_value();
}

struct Bipartition {
  VertexSet a;
  VertexSet b;
  bool operator==(const Bipartition&) const = default;
};

// Canonical witness partition. Blocks of the component graph put their lowest
// vertex in A; components untouched by M also go to A. For M = {} on a
// disconnected graph the component of vertex 0 forms A.
inline std::optional<Bipartition> cut_sides(const Graph& g, const Cut& m) {
  for (const Edge& e : m)
    if (!g.has_edge(e)) return std::nullopt;
  auto side = detail::cut_coloring(g, m);
  if (!side) return std::nullopt;
  Bipartition p;
  for (Vertex v = 0; v < g.n(); ++v) ((*side)[v] ? p.b : p.a).push_back(v);
  return p;
}

struct Contraction {
  Graph graph;
  std::vector<Vertex> map;  // old vertex -> new vertex
};

inline Contraction contract_edge(const Graph& g, Edge e) {
  e = make_edge(e.u, e.v);
  if (!g.has_edge(e)) throw std::invalid_argument("cannot contract missing edge " + to_string(e));
  Contraction c;
  c.map.resize(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) {
    Vertex w = v == e.v ? e.u : v;
    c.map[v] = w > e.v ? w - 1 : w;
  }
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    Vertex a = c.map[f.u], b = c.map[f.v];
    if (a != b) edges.push_back({a, b});
  }
  c.graph = build_graph(g.n() - 1, edges);
  return c;
}

// BFS from the lowest unvisited vertex of each component; neighbours in order.
inline Cut spanning_forest(const Graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Edge> tree;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    seen[s] = 1;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex v = queue[i];
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          tree.push_back(make_edge(v, w));
          queue.push_back(w);
        }
    }
  }
  return Cut(std::move(tree));
}

inline bool is_forest(const Graph& g) {
  return g.m() + static_cast<std::size_t>(component_count(g)) == static_cast<std::size_t>(g.n());
}

inline Graph remove_edges(const Graph& g, const Cut& drop) {
  std::vector<Edge> keep;
  for (const Edge& e : g.edges())
    if (!drop.contains(e)) keep.push_back(e);
  return build_graph(g.n(), keep);
}

inline Graph subgraph_of_edges(int n, const Cut& edges) { return build_graph(n, edges.edges()); }

// Disjoint union; vertices of b are shifted by a.n().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.n(), e.v + a.n()});
  return build_graph(a.n() + b.n(), edges);
}

}  // namespace mcut
