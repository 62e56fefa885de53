#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lexp/graph.hpp"

namespace lexp {

// Largest number of search-tree leaves canonical_form will visit before it
// gives up with SizeError.
inline constexpr std::size_t kMaxCanonicalLeaves = 200'000;

// Canonical relabeling of a small graph: colour refinement plus
// individualization, keeping the lexicographically smallest relabeled edge
// list. Interchangeable twins in a cell are tried once.
struct CanonicalForm {
  std::size_t num_nodes = 0;
  std::vector<std::pair<Id, Id>> edges;  // sorted, i < j
  std::vector<Id> labeling;              // labeling[u] = canonical position of u

  bool operator==(const CanonicalForm& o) const {
    return num_nodes == o.num_nodes && edges == o.edges;
  }
};

CanonicalForm canonical_form(const UnlabeledGraph& g);

bool graphs_isomorphic(const UnlabeledGraph& a, const UnlabeledGraph& b);

}  // namespace lexp
