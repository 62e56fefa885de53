#include "lexp/graph.hpp"

#include <algorithm>

#include "lexp/error.hpp"
#include "lexp/random.hpp"

namespace lexp {

UnlabeledGraph::UnlabeledGraph(std::size_t num_nodes, std::vector<std::pair<Id, Id>> edges)
    : adjacency_(num_nodes) {
  for (auto& [a, b] : edges) {
    if (a >= num_nodes || b >= num_nodes)
      throw ArgumentError("graph edge (" + std::to_string(a) + "," + std::to_string(b) +
                          ") outside " + std::to_string(num_nodes) + " nodes");
    if (a == b) throw ArgumentError("graph self-loop at node " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (auto [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& n : adjacency_) std::sort(n.begin(), n.end());
}

bool UnlabeledGraph::adjacent(std::size_t u, std::size_t v) const {
  const auto& n = adjacency_[u];
  return std::binary_search(n.begin(), n.end(), static_cast<Id>(v));
}

std::vector<std::vector<Id>> UnlabeledGraph::components() const {
  std::vector<char> seen(num_nodes(), 0);
  std::vector<std::vector<Id>> out;
  for (std::size_t s = 0; s < num_nodes(); ++s) {
    if (seen[s]) continue;
    std::vector<Id> comp, stack{static_cast<Id>(s)};
    seen[s] = 1;
    while (!stack.empty()) {
      const Id u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Id w : adjacency_[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

UnlabeledGraph UnlabeledGraph::induced(const std::vector<Id>& nodes) const {
  std::vector<Id> pos(num_nodes(), static_cast<Id>(-1));
  for (std::size_t i = 0; i < nodes.size(); ++i) pos[nodes[i]] = static_cast<Id>(i);
  std::vector<std::pair<Id, Id>> sub;
  for (auto [a, b] : edges_)
    if (pos[a] != static_cast<Id>(-1) && pos[b] != static_cast<Id>(-1)) sub.emplace_back(pos[a], pos[b]);
  return UnlabeledGraph(nodes.size(), std::move(sub));
}

StarExpansion star_expansion(const Hypergraph& h) {
  StarExpansion s{h.num_vertices(), h.num_hyperedges(), {}};
  s.edges.reserve(h.num_pairs());
  const auto offset = static_cast<Id>(h.num_vertices());
  for (std::size_t e = 0; e < h.num_hyperedges(); ++e)
    for (Id v : h.pins(e)) s.edges.emplace_back(v, offset + static_cast<Id>(e));
  return s;
}

UnlabeledGraph line_graph(std::size_t num_nodes, const std::vector<std::pair<Id, Id>>& edges) {
  for (auto [a, b] : edges)
    if (a >= num_nodes || b >= num_nodes) throw ArgumentError("line_graph: edge outside node range");
  std::vector<std::pair<Id, Id>> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d)
        out.emplace_back(static_cast<Id>(i), static_cast<Id>(j));
    }
  }
  return UnlabeledGraph(edges.size(), std::move(out));
}

Hypergraph as_hypergraph(const UnlabeledGraph& g) {
  std::vector<std::vector<Id>> edges;
  edges.reserve(g.num_edges());
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  return Hypergraph(g.num_nodes(), std::move(edges));
}

UnlabeledGraph random_connected_graph(std::size_t num_nodes, double p, std::uint64_t seed) {
  if (num_nodes == 0) throw ArgumentError("random_connected_graph: need at least one node");
  Rng rng(seed);
  std::vector<std::pair<Id, Id>> edges;
  for (std::size_t v = 1; v < num_nodes; ++v)
    edges.emplace_back(static_cast<Id>(rng.below(v)), static_cast<Id>(v));
  for (std::size_t a = 0; a < num_nodes; ++a)
    for (std::size_t b = a + 1; b < num_nodes; ++b)
      if (rng.bernoulli(p)) edges.emplace_back(static_cast<Id>(a), static_cast<Id>(b));
  return UnlabeledGraph(num_nodes, std::move(edges));
}

}  // namespace lexp
