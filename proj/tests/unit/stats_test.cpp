#include <gtest/gtest.h>

#include <algorithm>

#include "json.hpp"
#include "lexp/stats.hpp"
#include "oracles.hpp"

using namespace lexp;

TEST(GraphDensity, SmallCases) {
  EXPECT_EQ(graph_density(0, 0), 0.0);
  EXPECT_EQ(graph_density(1, 0), 0.0);
  EXPECT_DOUBLE_EQ(graph_density(2, 1), 1.0);
  EXPECT_DOUBLE_EQ(graph_density(8, 10), 10.0 / 28.0);
}

TEST(StructureStats, WorkedExample) {
  const auto s = structure_stats(oracle::worked_example(), SamplingConfig{});
  EXPECT_EQ(s.num_vertices, 5u);
  EXPECT_EQ(s.num_hyperedges, 3u);
  EXPECT_EQ(s.line_nodes, 8u);
  EXPECT_EQ(s.line_edges, 10u);
  EXPECT_DOUBLE_EQ(s.line_density, 10.0 / 28.0);
  // Clique pairs: {0,1}, {0,2}, {1,2}, {2,3}, {2,4}, {3,4}.
  EXPECT_EQ(s.clique_edges, 6u);
  EXPECT_DOUBLE_EQ(s.clique_density, 6.0 / 10.0);
  EXPECT_EQ(s.sampled_edge_bound, 10u);
}

TEST(StructureStats, SinglePair) {
  const auto s = structure_stats(parse_hypergraph("1 1\n0\n"), SamplingConfig{});
  EXPECT_EQ(s.line_nodes, 1u);
  EXPECT_EQ(s.line_edges, 0u);
  EXPECT_EQ(s.line_density, 0.0);
  EXPECT_EQ(s.clique_density, 0.0);
  EXPECT_EQ(s.sampled_edge_bound, 0u);
}

TEST(StructureStats, SamplingBoundShrinksWithThresholds) {
  // One hyperedge of 30 vertices: each line node has 29 hyperedge-similar neighbours.
  std::vector<Id> pins;
  for (Id v = 0; v < 30; ++v) pins.push_back(v);
  const Hypergraph h(30, {pins});
  const auto full = structure_stats(h, SamplingConfig{});
  EXPECT_EQ(full.line_edges, 30u * 29u / 2u);
  EXPECT_EQ(full.sampled_edge_bound, 30u * 8u);
  const auto wide = structure_stats(h, SamplingConfig{100, 100});
  EXPECT_EQ(wide.sampled_edge_bound, full.line_edges);
}

TEST(StructureStats, LineExpansionIsSparserOnLargeHyperedges) {
  // Many overlapping mid-sized hyperedges: the clique expansion saturates
  // while the line expansion stays sparse.
  std::vector<std::vector<Id>> edges;
  for (Id k = 0; k < 20; ++k) {
    std::vector<Id> pins;
    for (Id j = 0; j < 8; ++j) pins.push_back((k * 3 + j * 5) % 40);
    std::sort(pins.begin(), pins.end());
    pins.erase(std::unique(pins.begin(), pins.end()), pins.end());
    edges.push_back(pins);
  }
  const auto s = structure_stats(Hypergraph(40, edges), SamplingConfig{});
  EXPECT_LT(s.line_density, s.clique_density);
}

TEST(StructureStats, TableAndJson) {
  const auto s = structure_stats(oracle::worked_example(), SamplingConfig{});
  const auto table = stats_table(s);
  EXPECT_NE(table.find("line"), std::string::npos);
  const auto j = nlohmann::json::parse(stats_json(s));
  EXPECT_EQ(j["line_nodes"], 8);
  EXPECT_EQ(j["line_edges"], 10);
  EXPECT_EQ(j["clique_expansion_edges"], 6);
}
