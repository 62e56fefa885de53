#include "lexp/unify.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "lexp/error.hpp"

namespace lexp {

std::string EquivalenceReport::text() const {
  std::ostringstream out;
  out.precision(6);
  out << (pass ? "PASS" : "FAIL") << "  " << lhs << " vs " << rhs;
  if (!variant.empty()) out << " [" << variant << "]";
  out << std::scientific << "  max_diff=" << max_diff << " tol=" << tol;
  out << "  |V|=" << num_vertices << " |E|=" << num_hyperedges;
  if (seed) out << " seed=" << *seed;
  return out.str();
}

std::string EquivalenceReport::json_line() const {
  nlohmann::ordered_json j;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["variant"] = variant;
  j["max_diff"] = std::isfinite(max_diff) ? nlohmann::ordered_json(max_diff) : nlohmann::ordered_json("inf");
  j["tol"] = tol;
  j["pass"] = pass;
  j["num_vertices"] = num_vertices;
  j["num_hyperedges"] = num_hyperedges;
  j["seed"] = seed ? nlohmann::ordered_json(*seed) : nlohmann::ordered_json(nullptr);
  return j.dump();
}

EquivalenceReport make_report(std::string lhs, std::string rhs, std::string variant,
                              double max_diff, double tol, std::size_t num_vertices,
                              std::size_t num_hyperedges, std::optional<std::uint64_t> seed) {
  EquivalenceReport r;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.variant = std::move(variant);
  r.max_diff = max_diff;
  r.tol = tol;
  r.pass = max_diff <= tol;
  r.num_vertices = num_vertices;
  r.num_hyperedges = num_hyperedges;
  r.seed = seed;
  return r;
}

SparseMatrix degraded_line_adjacency(const Hypergraph& h) {
  return effective_vertex_adjacency(h, 1.0, 0.0, AdjacencyForm::symmetric);
}

SparseMatrix modified_clique_adjacency(const Hypergraph& h) {
  for (std::size_t e = 0; e < h.num_hyperedges(); ++e)
    if (h.hyperedge_degree(e) < 2)
      throw InvalidInputError("modified_clique_adjacency: hyperedge " + std::to_string(e) +
                              " has " + std::to_string(h.hyperedge_degree(e)) +
                              " vertices (needs at least 2)");
  std::vector<double> degree(h.num_vertices(), 0.0);
  std::vector<Triplet> t;
  for (const auto& pins : h.hyperedges()) {
    const double k = static_cast<double>(pins.size()) - 1.0;
    for (Id u : pins) {
      degree[u] += 1.0 / k;
      for (Id v : pins)
        if (u != v) t.push_back({u, v, 1.0 / (k * k)});
    }
  }
  auto weights = SparseMatrix::from_triplets(h.num_vertices(), h.num_vertices(), std::move(t));
  std::vector<double> inv_sqrt(h.num_vertices(), 0.0);
  for (std::size_t v = 0; v < degree.size(); ++v)
    if (degree[v] > 0.0) inv_sqrt[v] = 1.0 / std::sqrt(degree[v]);
  return weights.scale_rows_cols(inv_sqrt, inv_sqrt);
}

SparseMatrix simple_graph_adjacency(const UnlabeledGraph& g, DiagonalConvention diagonal) {
  const std::size_t n = g.num_nodes();
  std::vector<Triplet> t;
  for (auto [a, b] : g.edges()) {
    t.push_back({a, b, 1.0});
    t.push_back({b, a, 1.0});
  }
  std::vector<double> inv_sqrt(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    if (g.degree(u) == 0) continue;
    inv_sqrt[u] = 1.0 / std::sqrt(static_cast<double>(g.degree(u)));
    if (diagonal == DiagonalConvention::incidence_sums)
      t.push_back({u, u, static_cast<double>(g.degree(u))});
  }
  return SparseMatrix::from_triplets(n, n, std::move(t)).scale_rows_cols(inv_sqrt, inv_sqrt);
}

EquivalenceReport check_star_equivalence(const Hypergraph& h, double tol,
                                         StarNormalizer normalizer,
                                         std::optional<std::uint64_t> seed) {
  const auto lhs = degraded_line_adjacency(h);
  const auto rhs = star_adjacency(h, normalizer);
  return make_report("degraded_line", "star",
                     normalizer == StarNormalizer::weighted_degree ? "weighted_degree"
                                                                   : "vertex_degree",
                     max_abs_diff(lhs, rhs), tol, h.num_vertices(), h.num_hyperedges(), seed);
}

EquivalenceReport check_simple_graph_factor(const UnlabeledGraph& g, double tol,
                                            std::optional<std::uint64_t> seed) {
  if (g.num_edges() == 0) throw InvalidInputError("check_simple_graph_factor: graph has no edges");
  const auto h = as_hypergraph(g);
  const auto lhs = degraded_line_adjacency(h);
  const auto half_gcn =
      SparseMatrix(g.num_nodes(), g.num_nodes())
          .add_scaled(simple_graph_adjacency(g, DiagonalConvention::incidence_sums), 0.5);
  return make_report("degraded_line", "simple_graph/2", "incidence_sums_diagonal",
                     max_abs_diff(lhs, half_gcn), tol, h.num_vertices(), h.num_hyperedges(), seed);
}

}  // namespace lexp
