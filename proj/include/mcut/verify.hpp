#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "enumerate.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "methods.hpp"

namespace mcut {

struct VerifyReport {
  std::string instance;
  Method method = Method::Vc;
  Kind kind = Kind::All;
  std::size_t oracle_count = 0;
  std::size_t lifted_count = 0;
  std::size_t duplicates = 0;        // repeated within one family
  std::size_t disjointness = 0;      // shared between two families
  std::size_t misses = 0;            // oracle cuts never produced
  std::size_t spurious = 0;          // produced cuts that are not solutions
  std::size_t empty_families = 0;    // counted only where families must be nonempty
  std::size_t kernel_vertices = 0;
  std::size_t bound = 0;
  bool within_bound = true;

  bool pass() const {
    return duplicates == 0 && disjointness == 0 && misses == 0 && spurious == 0 && empty_families == 0 && within_bound;
  }
};

inline std::string report_header() {
  return "instance\tmethod\tkind\toracle\tlifted\tduplicates\tshared\tmissing\tspurious\tempty\tkernel_n\tbound\tstatus";
}

inline std::string report_line(const VerifyReport& r) {
  std::ostringstream out;
  out << r.instance << '\t' << method_name(r.method) << '\t' << kind_name(r.kind) << '\t' << r.oracle_count << '\t'
      << r.lifted_count << '\t' << r.duplicates << '\t' << r.disjointness << '\t' << r.misses << '\t' << r.spurious
      << '\t' << r.empty_families << '\t' << r.kernel_vertices << '\t' << r.bound << '\t'
      << (r.pass() ? "PASS" : "FAIL");
  return out.str();
}

// Families must be nonempty for the fully-polynomial kernels and for cp.
inline bool requires_nonempty_families(Method m, Kind kind) {
  if (m == Method::Cp) return true;
  return kind == Kind::Minimal && (m == Method::Vc || m == Method::Nd || m == Method::Mw || m == Method::Tc);
}

inline VerifyReport verify_method(const Graph& g, Method method, Kind kind, const Certificates& certs = {},
                                  std::string instance = "-") {
  VerifyReport rep;
  rep.instance = std::move(instance);
  rep.method = method;
  rep.kind = kind;
  const KernelRun run = run_kernel(g, method, kind, certs);
  rep.kernel_vertices = static_cast<std::size_t>(run.h.n());
  rep.bound = run.bound;
  rep.within_bound = run.within_bound;

  const std::vector<Cut> truth_list = oracle_enum(g, kind);
  const std::set<Cut> truth(truth_list.begin(), truth_list.end());
  rep.oracle_count = truth.size();

  std::map<Cut, std::size_t> owner;  // lifted cut -> kernel solution index
  const std::vector<Cut> kernel = oracle_enum(run.h, kind);
  const bool nonempty = requires_nonempty_families(method, kind);
  for (std::size_t i = 0; i < kernel.size(); ++i) {
    std::size_t produced = 0;
    for (const Cut& c : run.lift(kernel[i])) {
      ++produced;
      ++rep.lifted_count;
      auto [it, fresh] = owner.emplace(c, i);
      if (!fresh) {
        ++(it->second == i ? rep.duplicates : rep.disjointness);
        continue;
      }
      if (!truth.count(c)) ++rep.spurious;
    }
    if (nonempty && produced == 0) ++rep.empty_families;
    if (run.single_lift && produced != 1) ++rep.duplicates;
  }
  for (const Cut& c : truth)
    if (!owner.count(c)) ++rep.misses;
  return rep;
}

struct ExtremalReport {
  std::size_t instances = 0;
  std::size_t over_bound = 0;          // count > F(n+1)-1
  std::size_t attainers = 0;           // count == F(n+1)-1
  std::size_t unexpected_attainers = 0;
  std::uint64_t max_count = 0;
  bool pass() const { return over_bound == 0 && unexpected_attainers == 0; }
};

inline bool is_path_graph(const Graph& g) {
  if (!is_connected(g) || g.m() + 1 != static_cast<std::size_t>(g.n())) return false;
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

// Two complete components of sizes at most two.
inline bool is_small_clique_pair(const Graph& g) {
  auto comps = components(g);
  if (comps.size() != 2) return false;
  for (const VertexSet& c : comps) {
    if (c.size() > 2) return false;
    if (c.size() == 2 && !g.has_edge(c[0], c[1])) return false;
  }
  return true;
}

inline bool extremal_allowed(const Graph& g) {
  if (is_path_graph(g)) return true;
  return g.n() <= 4 && is_small_clique_pair(g);
}

inline ExtremalReport check_extremal(const std::vector<Graph>& corpus) {
  ExtremalReport rep;
  for (const Graph& g : corpus) {
    ++rep.instances;
    const std::uint64_t count = oracle_enum(g, Kind::All).size();
    const std::uint64_t bound = fib(g.n() + 1) - 1;
    rep.max_count = std::max(rep.max_count, count);
    if (count > bound) ++rep.over_bound;
    if (count == bound) {
      ++rep.attainers;
      if (!extremal_allowed(g)) ++rep.unexpected_attainers;
    }
  }
  return rep;
}

// Every labelled graph on n vertices, one per subset of the possible edges.
inline std::vector<Graph> all_labelled_graphs(int n) {
  std::vector<Edge> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
  if (slots.size() > 20) throw std::invalid_argument("too many labelled graphs");
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1u) e.push_back(slots[b]);
    out.push_back(build_graph(n, e));
  }
  return out;
}

struct CorpusInstance {
  std::string id;
  Graph g;
  Certificates certs;
};

namespace detail {

inline Graph append_k2s(const Graph& g, int extra) {
  std::vector<Edge> e = g.edges();
  for (int i = 0; i < extra; ++i) e.push_back({g.n() + 2 * i, g.n() + 2 * i + 1});
  return build_graph(g.n() + 2 * extra, e);
}

inline Graph random_simple(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.push_back({i, j});
  return build_graph(n, e);
}

// A connected random quotient with every node replaced by a small random graph.
inline CorpusInstance substituted_instance(std::mt19937_64& rng) {
  while (true) {
    int r = 2 + static_cast<int>(rng() % 4);
    Graph q = random_simple(r, 0.6, rng);
    if (!is_connected(q)) continue;
    std::vector<Edge> e;
    std::vector<VertexSet> blocks;
    int next = 0;
    for (int i = 0; i < r; ++i) {
      int size = 1 + static_cast<int>(rng() % 4);
      Graph inside = random_simple(size, 0.4, rng);
      for (const Edge& f : inside.edges()) e.push_back({next + f.u, next + f.v});
      VertexSet b(static_cast<std::size_t>(size));
      for (int j = 0; j < size; ++j) b[static_cast<std::size_t>(j)] = next + j;
      blocks.push_back(b);
      next += size;
    }
    if (next > 14) continue;
    for (const Edge& f : q.edges())
      for (Vertex a : blocks[static_cast<std::size_t>(f.u)])
        for (Vertex b : blocks[static_cast<std::size_t>(f.v)]) e.push_back({a, b});
    CorpusInstance inst;
    inst.g = build_graph(next, e);
    if (rng() % 2) inst.certs.modular_partition = sorted_partition(blocks);
    return inst;
  }
}

}  // namespace detail

// Seeded, parameter-planted instances with n <= 14 for one method.
inline std::vector<CorpusInstance> standard_corpus(Method method, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(method) * 0x9e3779b97f4a7c15ULL));
  std::vector<CorpusInstance> out;
  auto small = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  for (int i = 0; i < count; ++i) {
    CorpusInstance inst;
    switch (method) {
      case Method::Vc: {
        int n = small(2, 14);
        inst.g = generate({Family::RandomVc, n, small(1, std::min(n, 4)), 0, 0, rng()}).graph;
        break;
      }
      case Method::Tc: {
        Graph g;
        if (i % 2 == 0) {
          g = generate({Family::RandomNd, small(4, 12), small(2, 4), 0, 0, rng()}).graph;
        } else {
          g = generate({Family::RandomVc, small(3, 10), small(1, 3), 0, 0, rng()}).graph;
        }
        int extra = small(0, 2);
        inst.g = g.n() + 2 * extra <= 14 ? detail::append_k2s(g, extra) : g;
        break;
      }
      case Method::Nd: {
        int k = small(1, 5);
        inst.g = generate({Family::RandomNd, small(k, 14), k, 0, 0, rng()}).graph;
        break;
      }
      case Method::Mw:
        inst = detail::substituted_instance(rng);
        break;
      case Method::Fen:
        inst.g = generate({Family::RandomFen, small(2, 14), small(0, 4), 0, 0, rng()}).graph;
        break;
      case Method::Cp: {
        int k = small(1, 4);
        auto gen = generate({Family::RandomCp, std::min(14, k + small(0, 11)), k, 0, 0, rng()});
        inst.g = gen.graph;
        inst.certs.clique_partition = gen.clique_partition;
        break;
      }
      default:
        throw std::invalid_argument("no corpus for " + std::string(method_name(method)));
    }
    inst.id = std::string(method_name(method)) + "-" + std::to_string(i);
    out.push_back(std::move(inst));
  }
  return out;
}

inline std::vector<Kind> applicable_kinds(Method m) {
  std::vector<Kind> out;
  for (Kind k : {Kind::All, Kind::Minimal, Kind::Maximal})
    if (method_supports(m, k)) out.push_back(k);
  return out;
}

}  // namespace mcut
