#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexp/sparse.hpp"

namespace lexp {

using Id = std::uint32_t;

enum class DegreeKind { vertex, hyperedge };

struct DegreeVector {
  DegreeKind kind;
  std::vector<std::size_t> values;

  std::size_t total() const;
  bool operator==(const DegreeVector&) const = default;
};

// Hypergraph over dense 0-based vertex and hyperedge ids. The incidence
// relation is stored twice (pins per hyperedge, hyperedges per vertex), both
// sorted; the constructor builds the second index from the first so the two
// always agree.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Throws ArgumentError for out-of-range or repeated vertices in a hyperedge.
  Hypergraph(std::size_t num_vertices, std::vector<std::vector<Id>> hyperedges);

  // Builds from incidence pairs (vertex, hyperedge). Duplicate pairs throw.
  static Hypergraph from_pairs(std::size_t num_vertices, std::size_t num_hyperedges,
                               const std::vector<std::pair<Id, Id>>& pairs);

  std::size_t num_vertices() const noexcept { return vertex_edges_.size(); }
  std::size_t num_hyperedges() const noexcept { return edge_vertices_.size(); }
  std::size_t num_pairs() const noexcept { return num_pairs_; }

  const std::vector<Id>& pins(std::size_t e) const { return edge_vertices_[e]; }
  const std::vector<Id>& incident_edges(std::size_t v) const { return vertex_edges_[v]; }
  const std::vector<std::vector<Id>>& hyperedges() const noexcept { return edge_vertices_; }

  std::size_t vertex_degree(std::size_t v) const { return vertex_edges_[v].size(); }
  std::size_t hyperedge_degree(std::size_t e) const { return edge_vertices_[e].size(); }

  bool contains(std::size_t v, std::size_t e) const;

  // Incidence pairs ordered by (vertex, hyperedge).
  std::vector<std::pair<Id, Id>> pairs() const;

  bool operator==(const Hypergraph& other) const {
    return edge_vertices_ == other.edge_vertices_ && vertex_edges_ == other.vertex_edges_;
  }

 private:
  std::vector<std::vector<Id>> edge_vertices_;
  std::vector<std::vector<Id>> vertex_edges_;
  std::size_t num_pairs_ = 0;
};

// Text format: header "<num_vertices> <num_hyperedges>", then one line per
// hyperedge with its space-separated 0-based vertex ids. A hyperedge line of
// the single token "-" is an empty hyperedge. Blank lines and lines starting
// with '#' are skipped; CRLF is accepted.
Hypergraph parse_hypergraph(std::string_view text);
Hypergraph read_hypergraph(std::istream& in);
Hypergraph load_hypergraph(const std::string& path);
std::string render_hypergraph(const Hypergraph& h);

DegreeVector vertex_degrees(const Hypergraph& h);
DegreeVector hyperedge_degrees(const Hypergraph& h);

// |V| x |E| binary matrix.
SparseMatrix incidence_matrix(const Hypergraph& h);

struct ValidationReport {
  bool ok = true;  // false iff some hyperedge is empty
  std::vector<Id> empty_hyperedges;
  std::vector<Id> isolated_vertices;
  std::vector<std::pair<Id, Id>> duplicate_hyperedges;  // (first, later copy)

  std::string summary() const;
};

ValidationReport validate(const Hypergraph& h);

// Each (v, e) pair is included independently with probability p. A hyperedge
// that comes out empty is redrawn up to 64 times, then given one uniformly
// chosen vertex. Deterministic in seed.
Hypergraph random_hypergraph(std::size_t num_vertices, std::size_t num_hyperedges, double p,
                             std::uint64_t seed);

// Drops empty hyperedges and isolated vertices, renumbering the survivors in
// their original order.
Hypergraph compact(const Hypergraph& h);

// Connected components of the star expansion. Isolated vertices and empty
// hyperedges each form a component of their own. Ids are sorted; components are
// ordered by their smallest member (vertices before hyperedges).
struct Component {
  std::vector<Id> vertices;
  std::vector<Id> hyperedges;
};
std::vector<Component> connected_components(const Hypergraph& h);

// The sub-hypergraph on one component, ids renumbered in sorted order.
Hypergraph restrict_to(const Hypergraph& h, const Component& c);

// Vertex/hyperedge roles swapped.
Hypergraph dual(const Hypergraph& h);

}  // namespace lexp
