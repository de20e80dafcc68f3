#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "generator.hpp"
#include "graph.hpp"

namespace mcut {

enum class Kind { All, Minimal, Maximal };

inline std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::All: return "all";
    case Kind::Minimal: return "minimal";
    case Kind::Maximal: return "maximal";
  }
  return "?";
}

inline std::optional<Kind> parse_kind(std::string_view s) {
  if (s == "all") return Kind::All;
  if (s == "minimal") return Kind::Minimal;
  if (s == "maximal") return Kind::Maximal;
  return std::nullopt;
}

using CutStream = Generator<Cut>;

inline std::uint64_t fib(int n) {
  if (n < 1) throw std::invalid_argument("fib is defined for n >= 1");
  if (n > 93) throw std::overflow_error("fib(" + std::to_string(n) + ") does not fit in 64 bits");
  std::uint64_t a = 1, b = 1;
  for (int i = 3; i <= n; ++i) {
    std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

inline std::vector<Cut> filter_extreme(std::vector<Cut> cuts, Kind kind) {
  if (kind == Kind::All) return cuts;
  std::sort(cuts.begin(), cuts.end(), [](const Cut& a, const Cut& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  if (kind == Kind::Maximal) std::reverse(cuts.begin(), cuts.end());
  std::vector<Cut> kept;
  for (const Cut& c : cuts) {
    bool dominated = false;
    for (const Cut& k : kept) {
      if (k.size() == c.size()) continue;
      if (kind == Kind::Minimal ? k.subset_of(c) : c.subset_of(k)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(c);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

struct OracleOptions {
  int max_component = 22;
};

namespace detail {

// Nonempty matching cuts of one connected component, by exhaustive bipartition scan.
inline std::vector<Cut> component_cuts(const Graph& g, const VertexSet& comp) {
  const int c = static_cast<int>(comp.size());
  std::vector<Cut> out;
  if (c < 2) return out;
  std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
  for (int i = 0; i < c; ++i) local[comp[i]] = i;
  std::vector<std::uint32_t> nb(static_cast<std::size_t>(c), 0);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (local[e.u] >= 0) {
      nb[local[e.u]] |= 1u << local[e.v];
      nb[local[e.v]] |= 1u << local[e.u];
      edges.push_back(e);
    }
  const std::uint32_t full = c == 32 ? ~0u : (1u << c) - 1;
  // Bit i set means comp[i] is on side B; comp[0] stays on side A.
  for (std::uint32_t half = 1; half < (1u << (c - 1)); ++half) {
    std::uint32_t mask = half << 1;
    bool ok = true;
    for (int i = 0; i < c && ok; ++i) {
      std::uint32_t other = (mask >> i & 1u) ? (full & ~mask) : mask;
      if (std::popcount(nb[i] & other) > 1) ok = false;
    }
    if (!ok) continue;
    std::vector<Edge> cut;
    for (const Edge& e : edges)
      if (((mask >> local[e.u]) ^ (mask >> local[e.v])) & 1u) cut.push_back(e);
    out.emplace_back(std::move(cut));
  }
  return out;
}

inline void product(const std::vector<std::vector<Cut>>& options, std::size_t i,
                    std::vector<Edge>& acc, std::set<Cut>& out) {
  if (i == options.size()) {
    out.insert(Cut(acc));
    return;
  }
  for (const Cut& c : options[i]) {
    std::size_t mark = acc.size();
    acc.insert(acc.end(), c.begin(), c.end());
    product(options, i + 1, acc, out);
    acc.resize(mark);
  }
}

}  // namespace detail

// Ground truth by brute force. Exponential in the largest component.
inline std::vector<Cut> oracle_enum(const Graph& g, Kind kind, OracleOptions opt = {}) {
  auto comps = components(g);
  for (const auto& c : comps)
    if (static_cast<int>(c.size()) > opt.max_component)
      throw std::length_error("component of " + std::to_string(c.size()) +
                              " vertices exceeds the oracle limit of " +
                              std::to_string(opt.max_component));
  std::vector<std::vector<Cut>> per;
  for (const auto& c : comps) per.push_back(detail::component_cuts(g, c));
  if (comps.size() == 1) {
    std::sort(per[0].begin(), per[0].end());
    return filter_extreme(std::move(per[0]), kind);
  }
  if (comps.empty()) return {};
  if (kind == Kind::Minimal) return {Cut{}};
  // Inclusion order factorises over components, so maximal cuts of G are the
  // unions of per-component maximal choices (with {} where none exist).
  for (auto& p : per) {
    if (kind == Kind::Maximal && !p.empty()) {
      p = filter_extreme(std::move(p), Kind::Maximal);
    } else {
      p.insert(p.begin(), Cut{});
    }
  }
  std::set<Cut> out;
  std::vector<Edge> acc;
  detail::product(per, 0, acc, out);
  return {out.begin(), out.end()};
}

struct MatchingConstraints {
  Cut forced;
  Cut forbidden;
  Cut coupled;  // all in or all out
  std::optional<int> parity;
  bool require_nonempty = false;
};

namespace detail {

// DP states per vertex: bit (covered << 2 | parity << 1 | nonempty).
// t[opts][a][b] folds a child's state set b into the parent's state set a
// across the connecting edge, where opts bit 0 allows the edge out and bit 1 in.
struct CombineTable {
  std::array<std::array<std::array<std::uint8_t, 256>, 256>, 4> t{};
  CombineTable() {
    for (int opts = 0; opts < 4; ++opts)
      for (int a = 0; a < 256; ++a)
        for (int b = 0; b < 256; ++b) {
          std::uint8_t r = 0;
          for (int s = 0; s < 8; ++s) {
            if (!(a >> s & 1)) continue;
            for (int u = 0; u < 8; ++u) {
              if (!(b >> u & 1)) continue;
              int sc = s >> 2, sp = s >> 1 & 1, sn = s & 1;
              int up = u >> 1 & 1, un = u & 1, uc = u >> 2;
              if (opts & 1) r |= static_cast<std::uint8_t>(1u << (sc << 2 | (sp ^ up) << 1 | (sn | un)));
              if ((opts & 2) && !sc && !uc) r |= static_cast<std::uint8_t>(1u << (4 | (sp ^ up ^ 1) << 1 | 1));
            }
          }
          t[opts][a][b] = r;
        }
  }
};

inline const CombineTable& combine_table() {
  static const CombineTable table;
  return table;
}

enum class EdgeState : std::uint8_t { Free = 3, Out = 1, In = 2 };

class ForestMatchingSearch {
 public:
  ForestMatchingSearch(const Graph& f, std::optional<int> parity, bool nonempty)
      : f_(f), parity_(parity), nonempty_(nonempty) {
    const int n = f.n();
    parent_.assign(static_cast<std::size_t>(n), -1);
    parent_edge_.assign(static_cast<std::size_t>(n), -1);
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (Vertex s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      roots_.push_back(s);
      std::size_t start = order_.size();
      order_.push_back(s);
      for (std::size_t i = start; i < order_.size(); ++i) {
        Vertex v = order_[i];
        for (Vertex w : f.neighbors(v))
          if (!seen[w]) {
            seen[w] = 1;
            parent_[w] = v;
            parent_edge_[w] = edge_index(v, w);
            order_.push_back(w);
          }
      }
    }
  }

  int edge_index(Vertex a, Vertex b) const {
    Edge e = make_edge(a, b);
    auto it = std::lower_bound(f_.edges().begin(), f_.edges().end(), e);
    return static_cast<int>(it - f_.edges().begin());
  }

  bool feasible(const std::vector<EdgeState>& st) const {
    const auto& tab = combine_table().t;
    acc_.assign(static_cast<std::size_t>(f_.n()), 1);
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      Vertex v = *it;
      Vertex p = parent_[v];
      if (p < 0) continue;
      int opts = static_cast<int>(st[parent_edge_[v]]);
      acc_[p] = tab[opts][acc_[p]][acc_[v]];
      if (!acc_[p]) return false;
    }
    // Fold tree roots together ignoring the covered bit.
    std::uint8_t total = 1;  // state (parity 0, empty)
    for (Vertex r : roots_) {
      std::uint8_t pr = 0;
      for (int s = 0; s < 8; ++s)
        if (acc_[r] >> s & 1) pr |= static_cast<std::uint8_t>(1u << (s & 3));
      std::uint8_t next = 0;
      for (int a = 0; a < 4; ++a) {
        if (!(total >> a & 1)) continue;
        for (int b = 0; b < 4; ++b)
          if (pr >> b & 1) next |= static_cast<std::uint8_t>(1u << (((a ^ b) & 2) | ((a | b) & 1)));
      }
      total = next;
    }
    for (int s = 0; s < 4; ++s) {
      if (!(total >> s & 1)) continue;
      if (parity_ && (s >> 1) != *parity_) continue;
      if (nonempty_ && !(s & 1)) continue;
      return true;
    }
    return false;
  }

 private:
  const Graph& f_;
  std::optional<int> parity_;
  bool nonempty_;
  std::vector<Vertex> order_, roots_, parent_;
  std::vector<int> parent_edge_;
  mutable std::vector<std::uint8_t> acc_;
};

inline CutStream forest_matchings_basic(Graph f, std::vector<EdgeState> base, std::optional<int> parity,
                                        bool nonempty) {
  ForestMatchingSearch search(f, parity, nonempty);
  const int m = static_cast<int>(f.m());
  std::vector<EdgeState> st = base;
  if (!search.feasible(st)) co_return;
  // stage[i]: 0 = try in, 1 = try out, 2 = exhausted.
  std::vector<int> stage(static_cast<std::size_t>(m) + 1, 0);
  int i = 0;
  while (i >= 0) {
    if (i == m) {
      std::vector<Edge> chosen;
      for (int j = 0; j < m; ++j)
        if (st[j] == EdgeState::In) chosen.push_back(f.edges()[j]);
      co_yield Cut(std::move(chosen));
      --i;
      continue;
    }
    if (stage[i] == 0) {
      stage[i] = 1;
      if (static_cast<int>(base[i]) & 2) {
        st[i] = EdgeState::In;
        if (search.feasible(st)) {
          stage[++i] = 0;
          continue;
        }
        // The prefix is extendable, so the other branch must be.
        st[i] = EdgeState::Out;
        stage[i] = 2;
        stage[++i] = 0;
        continue;
      }
    }
    if (stage[i] == 1) {
      stage[i] = 2;
      if (static_cast<int>(base[i]) & 1) {
        st[i] = EdgeState::Out;
        if (base[i] == EdgeState::Out || search.feasible(st)) {
          stage[++i] = 0;
          continue;
        }
      }
    }
    st[i] = base[i];
    --i;
  }
}

}  // namespace detail

inline CutStream enum_forest_matchings(const Graph& f, const MatchingConstraints& c) {
  if (!is_forest(f)) throw std::invalid_argument("enum_forest_matchings needs an acyclic graph");
  require_subset(f, c.forced);
  require_subset(f, c.forbidden);
  require_subset(f, c.coupled);
  for (const Edge& e : c.forced)
    if (c.forbidden.contains(e) || c.coupled.contains(e))
      throw std::invalid_argument("constraint sets overlap at " + to_string(e));
  for (const Edge& e : c.forbidden)
    if (c.coupled.contains(e)) throw std::invalid_argument("constraint sets overlap at " + to_string(e));
  if (!is_matching(f, c.forced)) throw std::invalid_argument("forced edges are not a matching");
  if (c.parity && *c.parity != 0 && *c.parity != 1)
    throw std::invalid_argument("parity target must be 0 or 1");

  auto states = [&](bool coupled_in) {
    std::vector<detail::EdgeState> st(f.m(), detail::EdgeState::Free);
    for (std::size_t i = 0; i < f.m(); ++i) {
      const Edge& e = f.edges()[i];
      if (c.forced.contains(e) || (coupled_in && c.coupled.contains(e))) st[i] = detail::EdgeState::In;
      if (c.forbidden.contains(e) || (!coupled_in && c.coupled.contains(e))) st[i] = detail::EdgeState::Out;
    }
    return st;
  };
  if (c.coupled.empty()) return detail::forest_matchings_basic(f, states(false), c.parity, c.require_nonempty);
  return [](Graph g, std::vector<detail::EdgeState> in, std::vector<detail::EdgeState> out,
            std::optional<int> parity, bool nonempty) -> CutStream {
    for (const Cut& m : detail::forest_matchings_basic(g, std::move(in), parity, nonempty)) co_yield m;
    for (const Cut& m : detail::forest_matchings_basic(g, std::move(out), parity, nonempty)) co_yield m;
  }(f, states(true), states(false), c.parity, c.require_nonempty);
}

namespace detail {

inline CutStream spanning_tree_all(Graph g) {
  Graph t = subgraph_of_edges(g.n(), spanning_forest(g));
  MatchingConstraints c;
  c.require_nonempty = is_connected(g);
  std::vector<char> side(static_cast<std::size_t>(g.n()));
  std::vector<char> seen(static_cast<std::size_t>(g.n()));
  std::vector<Vertex> queue;
  for (const Cut& mt : enum_forest_matchings(t, c)) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Vertex s = 0; s < g.n(); ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      side[s] = 0;
      queue.assign(1, s);
      for (std::size_t i = 0; i < queue.size(); ++i) {
        Vertex v = queue[i];
        for (Vertex w : t.neighbors(v))
          if (!seen[w]) {
            seen[w] = 1;
            side[w] = static_cast<char>(side[v] ^ (mt.contains(make_edge(v, w)) ? 1 : 0));
            queue.push_back(w);
          }
      }
    }
    Cut cut = edge_cut(g, side);
    if (is_matching(g, cut)) co_yield cut;
  }
}

inline CutStream from_list(std::vector<Cut> cuts) {
  for (const Cut& c : cuts) co_yield c;
}

}  // namespace detail

// Enumerates matching cuts through the matchings of a spanning forest.
inline CutStream spanning_tree_enum(const Graph& g, Kind kind) {
  if (kind == Kind::All) return detail::spanning_tree_all(g);
  return detail::from_list(filter_extreme(detail::spanning_tree_all(g).collect(), kind));
}

inline std::uint64_t count_mc(const Graph& g, Kind kind) {
  std::uint64_t count = 0;
  for (const Cut& c : spanning_tree_enum(g, kind)) {
    (void)c;
    ++count;
  }
  return count;
}

}  // namespace mcut
