#include "lexp/stats.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "lexp/expansions.hpp"

namespace lexp {

double graph_density(std::size_t nodes, std::size_t edges) {
  if (nodes < 2) return 0.0;
  return 2.0 * static_cast<double>(edges) /
         (static_cast<double>(nodes) * static_cast<double>(nodes - 1));
}

StructureStats structure_stats(const Hypergraph& h, const SamplingConfig& sampling) {
  StructureStats s;
  s.num_vertices = h.num_vertices();
  s.num_hyperedges = h.num_hyperedges();
  s.clique_edges = clique_expansion_graph(h).num_edges();
  s.clique_density = graph_density(s.num_vertices, s.clique_edges);
  const auto sizes = size_formulas(h);
  s.line_nodes = sizes.line_nodes;
  s.line_edges = sizes.line_edges;
  s.line_density = graph_density(s.line_nodes, s.line_edges);

  std::size_t kept = 0;
  for (auto [v, e] : h.pairs()) {
    kept += std::min(h.vertex_degree(v) - 1, sampling.delta_v);
    kept += std::min(h.hyperedge_degree(e) - 1, sampling.delta_e);
  }
  s.sampled_edge_bound = std::min(s.line_edges, kept);
  return s;
}

std::string stats_table(const StructureStats& s) {
  std::ostringstream out;
  char buf[64];
  auto row = [&](const char* name, const std::string& value) {
    std::snprintf(buf, sizeof buf, "%-26s", name);
    out << buf << value << '\n';
  };
  auto fixed = [&](double x) {
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return std::string(buf);
  };
  row("vertices", std::to_string(s.num_vertices));
  row("hyperedges", std::to_string(s.num_hyperedges));
  row("clique_expansion_edges", std::to_string(s.clique_edges));
  row("clique_expansion_density", fixed(s.clique_density));
  row("line_nodes", std::to_string(s.line_nodes));
  row("line_edges", std::to_string(s.line_edges));
  row("line_density", fixed(s.line_density));
  row("sampled_line_edge_bound", std::to_string(s.sampled_edge_bound));
  return out.str();
}

std::string stats_json(const StructureStats& s) {
  nlohmann::ordered_json j;
  j["vertices"] = s.num_vertices;
  j["hyperedges"] = s.num_hyperedges;
  j["clique_expansion_edges"] = s.clique_edges;
  j["clique_expansion_density"] = s.clique_density;
  j["line_nodes"] = s.line_nodes;
  j["line_edges"] = s.line_edges;
  j["line_density"] = s.line_density;
  j["sampled_line_edge_bound"] = s.sampled_edge_bound;
  return j.dump(2) + "\n";
}

}  // namespace lexp
