#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "lexp/expansions.hpp"
#include "lexp/graph.hpp"
#include "lexp/hypergraph.hpp"

namespace lexp {

// Largest unlabeled graph accepted by krausz_reconstruct.
inline constexpr std::size_t kMaxKrauszNodes = 64;
// hypergraph_isomorphic requires min(|V|, |E|) <= this for both inputs.
inline constexpr std::size_t kMaxIsomorphismSide = 10;

// Reads the hypergraph off the (v, e) labels of the line nodes.
Hypergraph back_project_labeled(const LineExpansion& le);

// Partition of a graph's edges into cliques with every node in exactly two
// cliques; nodes covered fewer times are padded with single-node cliques.
struct CliqueCover {
  std::vector<std::vector<Id>> cliques;
  std::vector<std::array<Id, 2>> assignment;  // per node, its two clique ids
};

struct Reconstruction {
  // The two orientations of the clique bipartition: candidates[1] is the dual
  // of candidates[0]. candidates[0] is the smaller in canonical order.
  std::array<Hypergraph, 2> candidates;
  // Per input node, its (vertex, hyperedge) label in candidates[0].
  std::vector<std::pair<Id, Id>> labels;
  CliqueCover cover;
};

// Recovers a hypergraph from the bare topology of its line expansion by an
// exact backtracking search for a Krausz partition whose clique incidence is
// bipartite. Disconnected inputs are solved per component and joined.
// Throws SizeError above kMaxKrauszNodes, NotLineExpansionError when no
// Krausz partition exists, InconsistentInputError when partitions exist but
// none has a 2-colorable clique incidence.
Reconstruction krausz_reconstruct(const UnlabeledGraph& g);

// Exact test for vertex and hyperedge bijections carrying a's incidence onto
// b's. Throws SizeError when min(|V|, |E|) of either input exceeds
// kMaxIsomorphismSide.
bool hypergraph_isomorphic(const Hypergraph& a, const Hypergraph& b);

// Canonical ordering key used to pick candidates[0]: counts first, then the
// sorted list of sorted pin lists.
bool canonical_less(const Hypergraph& a, const Hypergraph& b);

}  // namespace lexp
