#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "parameters.hpp"

namespace mcut {

enum class Family {
  Path,
  Cycle,
  Complete,
  StarForest,
  Kc7,
  HkMin,
  HklFen,
  P3Gadget,
  RandomVc,
  RandomFen,
  RandomCp,
  RandomNd,
};

inline constexpr std::pair<Family, std::string_view> kFamilyNames[] = {
    {Family::Path, "path"},           {Family::Cycle, "cycle"},         {Family::Complete, "complete"},
    {Family::StarForest, "star_forest"}, {Family::Kc7, "kc7"},           {Family::HkMin, "hk_min"},
    {Family::HklFen, "hkl_fen"},      {Family::P3Gadget, "p3_gadget"},  {Family::RandomVc, "random_vc"},
    {Family::RandomFen, "random_fen"}, {Family::RandomCp, "random_cp"}, {Family::RandomNd, "random_nd"},
};

inline std::optional<Family> parse_family(std::string_view s) {
  for (auto [f, name] : kFamilyNames)
    if (name == s) return f;
  return std::nullopt;
}

inline std::string_view family_name(Family f) {
  for (auto [g, name] : kFamilyNames)
    if (g == f) return name;
  return "?";
}

struct FamilySpec {
  Family family = Family::Path;
  int n = 0;
  int k = 0;
  int l = 0;
  int p = 0;
  std::uint64_t seed = 0;
};

struct GeneratedInstance {
  Graph graph;
  std::optional<VertexClassPartition> clique_partition;
  std::optional<VertexClassPartition> modular_partition;
  std::optional<Cut> feedback_edges;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("invalid family parameters: " + what);
}

inline void add_path(std::vector<Edge>& e, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) e.push_back(make_edge(vs[i], vs[i + 1]));
}

inline void add_clique(std::vector<Edge>& e, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) e.push_back(make_edge(vs[i], vs[j]));
}

// Relabels vertices with a seeded permutation; partitions follow along.
struct Relabel {
  std::vector<Vertex> perm;
  Relabel(int n, std::mt19937_64& rng) : perm(static_cast<std::size_t>(n)) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
  }
  std::vector<Edge> edges(const std::vector<Edge>& in) const {
    std::vector<Edge> out;
    for (const Edge& e : in) out.push_back(make_edge(perm[e.u], perm[e.v]));
    return out;
  }
  VertexClassPartition partition(const std::vector<VertexSet>& blocks, std::vector<ModuleKind> kinds = {}) const {
    std::vector<VertexSet> out;
    for (const auto& b : blocks) {
      VertexSet s;
      for (Vertex v : b) s.push_back(perm[v]);
      out.push_back(s);
    }
    return sorted_partition(std::move(out), std::move(kinds));
  }
};

inline int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

}  // namespace detail

inline GeneratedInstance generate(const FamilySpec& s) {
  using detail::require;
  GeneratedInstance out;
  std::vector<Edge> e;
  std::mt19937_64 rng(s.seed);
  switch (s.family) {
    case Family::Path: {
      require(s.n >= 1, "path needs n >= 1");
      std::vector<Vertex> vs(static_cast<std::size_t>(s.n));
      std::iota(vs.begin(), vs.end(), 0);
      detail::add_path(e, vs);
      out.graph = build_graph(s.n, e);
      break;
    }
    case Family::Cycle: {
      require(s.n >= 3, "cycle needs n >= 3");
      for (int i = 0; i < s.n; ++i) e.push_back(make_edge(i, (i + 1) % s.n));
      out.graph = build_graph(s.n, e);
      break;
    }
    case Family::Complete: {
      require(s.n >= 1, "complete needs n >= 1");
      std::vector<Vertex> vs(static_cast<std::size_t>(s.n));
      std::iota(vs.begin(), vs.end(), 0);
      detail::add_clique(e, vs);
      out.graph = build_graph(s.n, e);
      break;
    }
    case Family::StarForest: {
      require(s.k >= 1 && s.p >= 1, "star_forest needs k >= 1 and p >= 1");
      for (int i = 0; i < s.k; ++i) {
        int c = i * (s.p + 1);
        for (int j = 1; j <= s.p; ++j) e.push_back({c, c + j});
      }
      out.graph = build_graph(s.k * (s.p + 1), e);
      break;
    }
    case Family::Kc7: {
      require(s.k >= 1, "kc7 needs k >= 1");
      for (int i = 0; i < s.k; ++i)
        for (int j = 0; j < 7; ++j) e.push_back(make_edge(7 * i + j, 7 * i + (j + 1) % 7));
      out.graph = build_graph(7 * s.k, e);
      break;
    }
    case Family::HkMin: {
      require(s.k >= 1, "hk_min needs k >= 1");
      std::vector<Vertex> us, vs;
      for (int i = 0; i < s.k; ++i) {
        int b = 5 * i;
        detail::add_path(e, {b, b + 1, b + 2, b + 3, b + 4});
        us.push_back(b);
        vs.push_back(b + 4);
      }
      detail::add_clique(e, us);
      detail::add_clique(e, vs);
      out.graph = build_graph(5 * s.k, e);
      break;
    }
    case Family::HklFen: {
      require(s.k >= 1 && s.l >= 1, "hkl_fen needs k >= 1 and l >= 1");
      std::vector<Vertex> us, vs;
      for (int i = 0; i < s.k; ++i) {
        int b = i * (s.l + 1);
        std::vector<Vertex> p(static_cast<std::size_t>(s.l + 1));
        std::iota(p.begin(), p.end(), b);
        detail::add_path(e, p);
        us.push_back(b);
        vs.push_back(b + s.l);
      }
      detail::add_path(e, us);
      detail::add_path(e, vs);
      out.graph = build_graph(s.k * (s.l + 1), e);
      break;
    }
    case Family::P3Gadget: {
      require(s.k >= 1, "p3_gadget needs k >= 1");
      int src = 3 * s.k, dst = 3 * s.k + 1;
      for (int i = 0; i < s.k; ++i) {
        detail::add_path(e, {3 * i, 3 * i + 1, 3 * i + 2});
        e.push_back({3 * i, src});
        e.push_back({3 * i + 2, dst});
      }
      out.graph = build_graph(3 * s.k + 2, e);
      break;
    }
    case Family::RandomVc: {
      // Cover side 0..k-1; the rest is independent with degrees 0, 1 or more.
      require(s.k >= 1 && s.n >= s.k, "random_vc needs 1 <= k <= n");
      for (int a = 0; a < s.k; ++a)
        for (int b = a + 1; b < s.k; ++b)
          if (detail::coin(rng, 0.5)) e.push_back({a, b});
      for (int v = s.k; v < s.n; ++v) {
        double r = std::uniform_real_distribution<double>(0, 1)(rng);
        int d = r < 0.15 ? 0 : r < 0.45 ? 1 : detail::pick(rng, std::min(2, s.k), s.k);
        std::vector<Vertex> cover(static_cast<std::size_t>(s.k));
        std::iota(cover.begin(), cover.end(), 0);
        std::shuffle(cover.begin(), cover.end(), rng);
        for (int i = 0; i < d; ++i) e.push_back({cover[i], v});
      }
      detail::Relabel rl(s.n, rng);
      out.graph = build_graph(s.n, rl.edges(e));
      break;
    }
    case Family::RandomFen: {
      // Random forest with one to three trees plus k extra edges.
      require(s.n >= 1 && s.k >= 0, "random_fen needs n >= 1 and k >= 0");
      int trees = std::min(s.n, detail::pick(rng, 1, 3));
      std::vector<int> root_of(static_cast<std::size_t>(s.n));
      for (int v = 0; v < s.n; ++v) {
        if (v < trees) {
          root_of[v] = v;
          continue;
        }
        int parent = detail::pick(rng, 0, v - 1);
        root_of[v] = root_of[parent];
        e.push_back({parent, v});
      }
      std::set<Edge> present(e.begin(), e.end());
      for (int added = 0, tries = 0; added < s.k && tries < 1000; ++tries) {
        int a = detail::pick(rng, 0, s.n - 1), b = detail::pick(rng, 0, s.n - 1);
        if (a == b || root_of[a] != root_of[b] || present.count(make_edge(a, b))) continue;
        present.insert(make_edge(a, b));
        e.push_back(make_edge(a, b));
        ++added;
      }
      detail::Relabel rl(s.n, rng);
      out.graph = build_graph(s.n, rl.edges(e));
      out.feedback_edges = feedback_edge_set(out.graph);
      break;
    }
    case Family::RandomCp: {
      // k cliques; some pairs joined by a matching, a few by a non-matching.
      require(s.k >= 1, "random_cp needs k >= 1");
      int cap = s.n > 0 ? s.n : 5 * s.k;
      std::vector<VertexSet> blocks;
      int next = 0;
      for (int i = 0; i < s.k; ++i) {
        int room = cap - next - (s.k - i - 1);
        if (room < 1) break;
        int size = std::min(room, detail::pick(rng, 1, 5));
        VertexSet b(static_cast<std::size_t>(size));
        std::iota(b.begin(), b.end(), next);
        next += size;
        detail::add_clique(e, b);
        blocks.push_back(b);
      }
      for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
          double r = std::uniform_real_distribution<double>(0, 1)(rng);
          auto a = blocks[i], b = blocks[j];
          std::shuffle(a.begin(), a.end(), rng);
          std::shuffle(b.begin(), b.end(), rng);
          if (r < 0.35) {
            int cnt = detail::pick(rng, 1, static_cast<int>(std::min(a.size(), b.size())));
            for (int t = 0; t < cnt; ++t) e.push_back(make_edge(a[t], b[t]));
          } else if (r < 0.45) {
            e.push_back(make_edge(a[0], b[0]));
            if (b.size() > 1) e.push_back(make_edge(a[0], b[1]));
            else if (a.size() > 1) e.push_back(make_edge(a[1], b[0]));
          }
        }
      detail::Relabel rl(next, rng);
      out.graph = build_graph(next, rl.edges(e));
      out.clique_partition = rl.partition(blocks);
      break;
    }
    case Family::RandomNd: {
      // Random quotient on k nodes, each blown up into a clique or an independent set.
      require(s.k >= 1, "random_nd needs k >= 1");
      int cap = s.n > 0 ? s.n : 4 * s.k;
      std::vector<VertexSet> blocks;
      std::vector<ModuleKind> kinds;
      int next = 0;
      for (int i = 0; i < s.k; ++i) {
        int room = cap - next - (s.k - i - 1);
        if (room < 1) break;
        int size = std::min(room, detail::pick(rng, 1, 4));
        VertexSet b(static_cast<std::size_t>(size));
        std::iota(b.begin(), b.end(), next);
        next += size;
        bool clique = detail::coin(rng, 0.5);
        if (clique) detail::add_clique(e, b);
        blocks.push_back(b);
        kinds.push_back(clique ? ModuleKind::Clique : ModuleKind::Independent);
      }
      for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
          if (detail::coin(rng, 0.35))
            for (Vertex a : blocks[i])
              for (Vertex b : blocks[j]) e.push_back({a, b});
      detail::Relabel rl(next, rng);
      out.graph = build_graph(next, rl.edges(e));
      if (blocks.size() >= 2) out.modular_partition = rl.partition(blocks, kinds);
      break;
    }
  }
  return out;
}

}  // namespace mcut
