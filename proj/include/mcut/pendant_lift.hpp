#pragma once

#include <map>
#include <vector>

#include "enumerate.hpp"
#include "graph.hpp"

namespace mcut {

// Classes of interchangeable pendant edges. Each class L_x hangs off one
// vertex x; only its designated edge ell_x survives in the kernel. All edges
// are in host-graph coordinates.
struct PendantClasses {
  std::map<Vertex, std::vector<Edge>> classes;  // x -> L_x, sorted, nonempty
  std::map<Edge, Vertex> designated;            // ell_x -> x

  void add(Vertex x, std::vector<Edge> edges) {
    if (edges.empty()) return;
    std::sort(edges.begin(), edges.end());
    designated[edges.front()] = x;
    classes[x] = std::move(edges);
  }
  bool empty() const { return classes.empty(); }
};

// Streams every host cut equivalent to m: edges outside the classes are kept,
// and each designated edge in m is swapped for every member of its class.
inline CutStream lift_pendant(PendantClasses pc, Cut m) {
  std::vector<Edge> fixed;
  std::vector<const std::vector<Edge>*> choices;
  for (const Edge& e : m) {
    auto it = pc.designated.find(e);
    if (it == pc.designated.end()) {
      fixed.push_back(e);
    } else {
      choices.push_back(&pc.classes.at(it->second));
    }
  }
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    std::vector<Edge> out = fixed;
    for (std::size_t i = 0; i < choices.size(); ++i) out.push_back((*choices[i])[idx[i]]);
    co_yield Cut(std::move(out));
    std::size_t i = choices.size();
    while (i > 0) {
      --i;
      if (++idx[i] < choices[i]->size()) break;
      idx[i] = 0;
      if (i == 0) co_return;
    }
    if (choices.empty()) co_return;
  }
}

}  // namespace mcut
