#pragma once

#include <cstddef>
#include <string>

#include "lexp/gcn.hpp"
#include "lexp/hypergraph.hpp"

namespace lexp {

struct StructureStats {
  std::size_t num_vertices = 0;
  std::size_t num_hyperedges = 0;
  std::size_t clique_edges = 0;
  double clique_density = 0.0;
  std::size_t line_nodes = 0;
  std::size_t line_edges = 0;
  double line_density = 0.0;
  // Upper bound on distinct line-expansion edges touched by one sampled
  // operator: every line node keeps at most delta_v + delta_e neighbours.
  std::size_t sampled_edge_bound = 0;
};

// density(n, m) = 2m / (n (n - 1)), and 0 when n < 2.
double graph_density(std::size_t nodes, std::size_t edges);

StructureStats structure_stats(const Hypergraph& h, const SamplingConfig& sampling);

std::string stats_table(const StructureStats& s);
std::string stats_json(const StructureStats& s);

}  // namespace lexp
