#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "enumerate.hpp"
#include "graph.hpp"
#include "kernel_cp.hpp"
#include "kernel_fen.hpp"
#include "kernel_nd_mw.hpp"
#include "kernel_tc.hpp"
#include "kernel_vc.hpp"
#include "parameters.hpp"

namespace mcut {

enum class Method { Oracle, SpanningTree, Vc, Tc, Nd, Mw, Fen, Cp };

inline constexpr std::pair<Method, std::string_view> kMethodNames[] = {
    {Method::Oracle, "oracle"}, {Method::SpanningTree, "spanning-tree"}, {Method::Vc, "vc"}, {Method::Tc, "tc"},
    {Method::Nd, "nd"},         {Method::Mw, "mw"},                       {Method::Fen, "fen"}, {Method::Cp, "cp"},
};

inline std::optional<Method> parse_method(std::string_view s) {
  for (auto [m, name] : kMethodNames)
    if (name == s) return m;
  return std::nullopt;
}

inline std::string_view method_name(Method m) {
  for (auto [x, name] : kMethodNames)
    if (x == m) return name;
  return "?";
}

inline bool is_kernel_method(Method m) { return m != Method::Oracle && m != Method::SpanningTree; }

inline bool method_supports(Method m, Kind kind) {
  if (m == Method::Mw) return kind == Kind::Minimal;
  if (m == Method::Fen) return kind != Kind::Maximal;
  return true;
}

struct Certificates {
  std::optional<VertexClassPartition> clique_partition;
  std::optional<VertexClassPartition> modular_partition;
};

// A kernel with its lifting, independent of the method. The lift streams keep
// the kernel alive on their own.
struct KernelRun {
  Method method = Method::Vc;
  Kind kind = Kind::All;
  Graph h;
  std::string parameter;       // e.g. "k=3"
  std::size_t bound = 0;       // vertex bound for this instance
  bool within_bound = true;
  std::optional<VertexSet> cover;  // a vertex cover of h, for the bounded-cover enumerator
  std::vector<Vertex> to_host;
  std::function<CutStream(const Cut&)> lift;
  bool single_lift = false;    // one host cut per kernel cut
};

namespace detail {

template <typename Keep>
inline CutStream holding(std::shared_ptr<Keep> /*keep*/, CutStream s) {
  for (const Cut& c : s) co_yield c;
}

inline VertexSet cover_in_kernel(const VcKernel& k) {
  VertexSet x;
  for (Vertex i = 0; i < k.h.n(); ++i)
    if (std::binary_search(k.ctx.x.begin(), k.ctx.x.end(), k.ctx.to_host[i])) x.push_back(i);
  return x;
}

inline std::string param(std::string_view name, std::size_t k) { return std::string(name) + "=" + std::to_string(k); }

}  // namespace detail

inline KernelRun run_kernel(const Graph& g_in, Method method, Kind kind, const Certificates& certs = {}) {
  if (!is_kernel_method(method)) throw std::invalid_argument(std::string(method_name(method)) + " is not a kernel");
  if (!method_supports(method, kind))
    throw std::invalid_argument(std::string(method_name(method)) + " has no kernel for " + std::string(kind_name(kind)) +
                                " cuts");
  auto g = std::make_shared<const Graph>(g_in);
  KernelRun r;
  r.method = method;
  r.kind = kind;
  switch (method) {
    case Method::Vc: {
      auto k = std::make_shared<const VcKernel>(kernelize_vc(*g));
      r.h = k->h;
      r.to_host = k->ctx.to_host;
      r.parameter = detail::param("cover", k->ctx.x.size());
      r.bound = k->ctx.trivial ? 2 : vc_size_bound(k->ctx.x.size());
      r.within_bound = vc_within_bound(*k);
      r.cover = detail::cover_in_kernel(*k);
      r.lift = [g, k, kind](const Cut& m) { return detail::holding(k, lift_vc(*g, *k, m, kind)); };
      break;
    }
    case Method::Tc: {
      auto k = std::make_shared<const TcKernel>(kernelize_tc(*g, kind));
      r.h = k->h;
      r.parameter = detail::param("cover", k->ctx.inner.ctx.x.size());
      r.bound = k->ctx.empty_only || k->ctx.inner.ctx.trivial ? 2 : vc_size_bound(k->ctx.inner.ctx.x.size());
      r.within_bound = tc_within_bound(*k);
      r.cover = k->ctx.empty_only ? VertexSet{} : detail::cover_in_kernel(k->ctx.inner);
      for (Vertex i = 0; i < r.h.n() && !k->ctx.empty_only; ++i)
        r.to_host.push_back(k->ctx.gprime_to_host[k->ctx.inner.ctx.to_host[i]]);
      r.lift = [g, k, kind](const Cut& m) { return detail::holding(k, lift_tc(*g, k->ctx, m, kind)); };
      break;
    }
    case Method::Nd: {
      auto k = std::make_shared<const NdKernel>(kernelize_nd(*g));
      r.h = k->h;
      r.to_host = k->ctx.to_host;
      r.parameter = detail::param("modules", k->ctx.modules.size());
      r.bound = k->ctx.trivial ? 2 : 3 * k->ctx.modules.size();
      r.within_bound = nd_within_bound(*k);
      r.lift = [g, k, kind](const Cut& m) { return detail::holding(k, lift_nd(*g, *k, m, kind)); };
      break;
    }
    case Method::Mw: {
      auto k = std::make_shared<const MwKernel>(kernelize_mw_minimal(*g, certs.modular_partition));
      r.h = k->h;
      r.to_host = k->ctx.disconnected ? std::vector<Vertex>{} : k->ctx.inner.ctx.to_host;
      r.parameter = detail::param("modules", k->ctx.modules.size());
      r.bound = k->ctx.disconnected || k->ctx.modules.size() == 0 ? 2 : 6 * k->ctx.modules.size();
      r.within_bound = mw_within_bound(*k);
      r.lift = [g, k](const Cut& m) { return detail::holding(k, lift_mw_minimal(*g, *k, m)); };
      break;
    }
    case Method::Fen: {
      auto k = std::make_shared<const FenKernel>(kernelize_fen(*g, kind));
      r.h = k->h;
      r.to_host = k->ctx.to_host;
      r.parameter = detail::param("fen", k->ctx.s.size());
      const std::size_t s = k->ctx.s.size();
      r.bound = k->ctx.trivial != FenTrivial::None ? 2 : kind == Kind::Minimal ? 10 * s : 20 * s + 1;
      r.within_bound = fen_within_bound(*k);
      r.lift = [g, k](const Cut& m) { return detail::holding(k, lift_fen(*g, k->ctx, m)); };
      break;
    }
    case Method::Cp: {
      if (!certs.clique_partition) throw std::invalid_argument("cp needs a clique partition");
      auto k = std::make_shared<const CpKernel>(kernelize_cp(*g, *certs.clique_partition));
      r.h = k->h;
      r.to_host = k->ctx.to_host;
      r.parameter = detail::param("cliques", k->ctx.original.size());
      r.bound = cp_size_bound(k->ctx.original.size());
      r.within_bound = cp_within_bound(*k);
      r.single_lift = true;
      r.lift = [g, k](const Cut& m) { return detail::from_list({lift_cp(*g, k->ctx, m)}); };
      break;
    }
    default:
      break;
  }
  return r;
}

// Kernel-side solutions: the bounded-cover enumerator where a cover is known,
// the spanning-forest enumerator otherwise.
inline std::vector<Cut> kernel_solutions(const KernelRun& r) {
  if (r.cover) return filter_extreme(enum_mc_bounded_vc(r.h, *r.cover), r.kind);
  return spanning_tree_enum(r.h, r.kind).collect();
}

namespace detail {

inline CutStream lift_all(std::shared_ptr<const KernelRun> r) {
  for (const Cut& m : kernel_solutions(*r))
    for (const Cut& c : r->lift(m)) co_yield c;
}

}  // namespace detail

inline CutStream enumerate_with(const Graph& g, Method method, Kind kind, const Certificates& certs = {}) {
  if (method == Method::Oracle) return detail::from_list(oracle_enum(g, kind));
  if (method == Method::SpanningTree) return spanning_tree_enum(g, kind);
  return detail::lift_all(std::make_shared<const KernelRun>(run_kernel(g, method, kind, certs)));
}

}  // namespace mcut
