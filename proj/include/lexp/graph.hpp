#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "lexp/hypergraph.hpp"

namespace lexp {

// Simple undirected graph. Edges are stored as (i, j) with i < j, sorted and
// deduplicated; self-loops are rejected.
class UnlabeledGraph {
 public:
  UnlabeledGraph() = default;
  UnlabeledGraph(std::size_t num_nodes, std::vector<std::pair<Id, Id>> edges);

  std::size_t num_nodes() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<std::pair<Id, Id>>& edges() const noexcept { return edges_; }
  const std::vector<Id>& neighbors(std::size_t u) const { return adjacency_[u]; }
  std::size_t degree(std::size_t u) const { return adjacency_[u].size(); }
  bool adjacent(std::size_t u, std::size_t v) const;

  // Node lists of connected components, each sorted, ordered by smallest node.
  std::vector<std::vector<Id>> components() const;
  bool connected() const { return components().size() <= 1; }

  // Subgraph induced by nodes (renumbered in the given order).
  UnlabeledGraph induced(const std::vector<Id>& nodes) const;

  bool operator==(const UnlabeledGraph& other) const {
    return edges_ == other.edges_ && adjacency_.size() == other.adjacency_.size();
  }

 private:
  std::vector<std::pair<Id, Id>> edges_;
  std::vector<std::vector<Id>> adjacency_;
};

// Star expansion as a plain graph: nodes 0..|V|-1 are vertices, |V|..|V|+|E|-1
// hyperedges, one edge per incidence pair. Edge order is hyperedge-major.
struct StarExpansion {
  std::size_t num_vertices;
  std::size_t num_hyperedges;
  std::vector<std::pair<Id, Id>> edges;  // (vertex node, hyperedge node), unsorted
};
StarExpansion star_expansion(const Hypergraph& h);

// Line graph of an edge list: node k stands for edges[k]; two nodes are
// adjacent iff their edges share an endpoint.
UnlabeledGraph line_graph(std::size_t num_nodes, const std::vector<std::pair<Id, Id>>& edges);

// 2-regular hypergraph with one hyperedge per graph edge (in edge order).
Hypergraph as_hypergraph(const UnlabeledGraph& g);

// Erdos-Renyi graph with an added random spanning tree so the result is connected.
UnlabeledGraph random_connected_graph(std::size_t num_nodes, double p, std::uint64_t seed);

}  // namespace lexp
