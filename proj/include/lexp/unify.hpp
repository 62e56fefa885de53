#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "lexp/expansions.hpp"
#include "lexp/graph.hpp"
#include "lexp/hypergraph.hpp"
#include "lexp/sparse.hpp"

namespace lexp {

inline constexpr double kDefaultTolerance = 1e-12;

struct EquivalenceReport {
  std::string lhs;
  std::string rhs;
  std::string variant;
  double max_diff = 0.0;
  double tol = kDefaultTolerance;
  bool pass = false;
  std::size_t num_vertices = 0;
  std::size_t num_hyperedges = 0;
  std::optional<std::uint64_t> seed;

  std::string text() const;
  std::string json_line() const;
};

// pass is set from max_diff <= tol.
EquivalenceReport make_report(std::string lhs, std::string rhs, std::string variant,
                              double max_diff, double tol, std::size_t num_vertices,
                              std::size_t num_hyperedges, std::optional<std::uint64_t> seed);

// Line expansion adjacency seen from the vertices with w_e = 0 (symmetric form).
SparseMatrix degraded_line_adjacency(const Hypergraph& h);

// Clique adjacency with shared-hyperedge weights 1/(delta-1)^2 and degrees
// sum 1/(delta-1). Zero diagonal. Throws InvalidInputError naming the first
// hyperedge with delta(e) < 2.
SparseMatrix modified_clique_adjacency(const Hypergraph& h);

enum class DiagonalConvention {
  zero,            // A(u,u) = 0
  incidence_sums,  // A(u,u) = sum_e h(u,e)^2 / d(u) = 1 for non-isolated u
};

// A(u,v) = (#edges between u and v) / sqrt(d(u) d(v)); isolated nodes give zero rows.
SparseMatrix simple_graph_adjacency(const UnlabeledGraph& g,
                                    DiagonalConvention diagonal = DiagonalConvention::zero);

// Degraded line expansion against the star adjacency with the chosen normalizer.
EquivalenceReport check_star_equivalence(const Hypergraph& h, double tol = kDefaultTolerance,
                                         StarNormalizer normalizer = StarNormalizer::weighted_degree,
                                         std::optional<std::uint64_t> seed = std::nullopt);

// Degraded line expansion of the 2-regular hypergraph of g against half the
// simple-graph adjacency (incidence-sum diagonal, so the self terms agree too).
EquivalenceReport check_simple_graph_factor(const UnlabeledGraph& g,
                                            double tol = kDefaultTolerance,
                                            std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace lexp
