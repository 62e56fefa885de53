#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lexp/expansions.hpp"
#include "lexp/hypergraph.hpp"
#include "lexp/unify.hpp"

// Per-instance identity checks shared by the verify command and the test
// suites. Structural checks report max_diff 0 on success and 1 on failure
// with tolerance 0.
namespace lexp {

// H_r^T H_r against [[D_v, H], [H^T, D_e]] assembled directly.
EquivalenceReport check_block_gram(const Hypergraph& h, std::optional<std::uint64_t> seed = {});
// H_r H_r^T - 2I against the unit-weight line-expansion adjacency.
EquivalenceReport check_projection_adjacency(const Hypergraph& h,
                                             std::optional<std::uint64_t> seed = {});
EquivalenceReport check_size_formulas(const Hypergraph& h, std::optional<std::uint64_t> seed = {});
// Line expansion against the line graph of the star expansion, compared by
// canonical form.
EquivalenceReport check_line_graph_of_star(const Hypergraph& h,
                                           std::optional<std::uint64_t> seed = {});
EquivalenceReport check_labeled_round_trip(const Hypergraph& h,
                                           std::optional<std::uint64_t> seed = {});
// Structure-only reconstruction of every connected piece of h. Empty when a
// piece is beyond the exact-search limits.
std::optional<EquivalenceReport> check_unlabeled_round_trip(const Hypergraph& h,
                                                            std::optional<std::uint64_t> seed = {});
// A labeled line-expansion dump must be exactly the expansion its labels imply.
EquivalenceReport check_dump(const GraphDump& dump);

}  // namespace lexp
