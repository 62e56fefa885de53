#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "lexp/graph.hpp"
#include "lexp/hypergraph.hpp"
#include "lexp/sparse.hpp"

namespace lexp {

// Analysis operations that materialize |V| x |V| vertex adjacencies refuse
// hypergraphs with more vertices than this.
inline constexpr std::size_t kMaxAnalysisVertices = 4096;

enum class LinkKind : std::uint8_t {
  vertex_similar,     // same vertex, different hyperedge; weighted by w_e
  hyperedge_similar,  // same hyperedge, different vertex; weighted by w_v
};

struct LineEdge {
  Id i;
  Id j;
  LinkKind kind;
  bool operator==(const LineEdge&) const = default;
};

struct LineWeights {
  double w_v = 1.0;
  double w_e = 1.0;
};

// Line expansion of a hypergraph. Line nodes are the incidence pairs (v, e)
// ordered by vertex then hyperedge; two line nodes are linked iff they share
// the vertex or the hyperedge.
class LineExpansion {
 public:
  LineExpansion() = default;

  std::size_t num_vertices() const noexcept { return num_vertices_; }
  std::size_t num_hyperedges() const noexcept { return num_hyperedges_; }
  std::size_t num_nodes() const noexcept { return nodes_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::vector<std::pair<Id, Id>>& nodes() const noexcept { return nodes_; }
  const std::vector<LineEdge>& edges() const noexcept { return edges_; }
  LineWeights weights() const noexcept { return weights_; }

  std::optional<std::size_t> index_of(Id v, Id e) const;

  // Line nodes sharing vertex v / hyperedge e (ascending node index).
  std::vector<Id> vertex_group(Id v) const;
  const std::vector<Id>& hyperedge_group(Id e) const { return edge_groups_[e]; }

  // |V_l| x |V_l| weighted adjacency (w_e on vertex-similar, w_v on
  // hyperedge-similar links), zero diagonal.
  SparseMatrix adjacency() const;

  UnlabeledGraph graph() const;

 private:
  friend LineExpansion build_line_expansion(std::size_t, std::size_t,
                                            std::vector<std::pair<Id, Id>>, LineWeights);

  std::size_t num_vertices_ = 0;
  std::size_t num_hyperedges_ = 0;
  std::vector<std::pair<Id, Id>> nodes_;
  std::vector<std::size_t> vertex_offset_;
  std::vector<std::vector<Id>> edge_groups_;
  std::vector<LineEdge> edges_;
  LineWeights weights_;
};

// Throws ArgumentError if a weight is negative or both are zero.
LineExpansion line_expand(const Hypergraph& h, double w_v = 1.0, double w_e = 1.0);

// Line expansion from explicit labels. Throws InvalidInputError on a repeated label.
LineExpansion build_line_expansion(std::size_t num_vertices, std::size_t num_hyperedges,
                                   std::vector<std::pair<Id, Id>> labels, LineWeights weights);

struct ProjectionSet {
  SparseMatrix vertex;          // P_v:  |V_l| x |V|
  SparseMatrix hyperedge;       // P_e:  |V_l| x |E|
  SparseMatrix vertex_back;     // P_v': |V| x |V_l|
  SparseMatrix hyperedge_back;  // P_e': |E| x |V_l|
  SparseMatrix stacked;         // H_r = [P_v, P_e]
};

// Throws InvalidInputError if h has an empty hyperedge.
ProjectionSet projections(const Hypergraph& h);

// H_r^T H_r, which equals [[D_v, H], [H^T, D_e]].
SparseMatrix block_gram(const ProjectionSet& p);

// H_r H_r^T - 2I, the unweighted line-expansion adjacency.
SparseMatrix adjacency_from_projections(const ProjectionSet& p);

struct NormalizedOperator {
  SparseMatrix matrix;          // D^-1/2 (sI + A_l) D^-1/2
  std::vector<double> degree;   // row sums of sI + A_l
  double w_v = 1.0;
  double w_e = 1.0;
  double self_loop = 2.0;       // s = w_v + w_e
};

// Renormalized convolution operator with self-loop weight w_v + w_e.
NormalizedOperator renormalized_operator(const LineExpansion& le);

struct SizeCounts {
  std::size_t line_nodes = 0;
  std::size_t line_edges = 0;
  bool operator==(const SizeCounts&) const = default;
};

// Closed-form |V_l| and |E_l| from the degree sequences.
SizeCounts size_formulas(const Hypergraph& h);

// Standard clique expansion: A(u,v) = w(u,v) / sqrt(d(u) d(v)) with w the
// number of shared hyperedges and d(u) = sum_e h(u,e) (delta(e) - 1). Zero
// diagonal; vertices with d(u) = 0 give zero rows.
SparseMatrix clique_adjacency(const Hypergraph& h);

enum class StarNormalizer {
  vertex_degree,    // sqrt(sum_e h(u,e))
  weighted_degree,  // sqrt(sum_e h(u,e) / delta(e))
};

// A(u,v) = sum_e h(u,e) h(v,e) / delta(e)^2, divided by the chosen normalizer
// of u and of v. The diagonal is kept.
SparseMatrix star_adjacency(const Hypergraph& h,
                            StarNormalizer normalizer = StarNormalizer::vertex_degree);

enum class AdjacencyForm { random_walk, symmetric };

// Vertex-level adjacency induced by one line-expansion convolution followed
// by back-projection. Throws SizeError above kMaxAnalysisVertices and
// InvalidInputError for empty hyperedges or isolated vertices.
SparseMatrix effective_vertex_adjacency(const Hypergraph& h, double w_v, double w_e,
                                        AdjacencyForm form);

// Clique expansion as a graph on the vertices.
UnlabeledGraph clique_expansion_graph(const Hypergraph& h);

// Graph dump text format:
//   "<num_nodes> <num_edges>"
//   one line per node with two tokens "<vertex> <hyperedge>", where a token is
//   a 0-based id, "-" (role absent) or "?" (label stripped)
//   one line per edge "<i> <j>"
struct NodeLabel {
  std::optional<Id> vertex;
  std::optional<Id> hyperedge;
  bool stripped = false;
  bool operator==(const NodeLabel&) const = default;
};

struct GraphDump {
  std::vector<NodeLabel> labels;
  UnlabeledGraph graph;

  // True when every node carries both a vertex and a hyperedge id.
  bool fully_labeled() const;
};

void write_graph_dump(std::ostream& out, const GraphDump& dump);
GraphDump read_graph_dump(std::istream& in);

GraphDump line_expansion_dump(const LineExpansion& le, bool labeled = true);
GraphDump clique_expansion_dump(const Hypergraph& h);
GraphDump star_expansion_dump(const Hypergraph& h);

// Rebuilds a line expansion from a labeled dump and checks the dump's edges
// are exactly the ones the labels imply. Throws InvalidInputError otherwise.
LineExpansion line_expansion_from_dump(const GraphDump& dump);

}  // namespace lexp
