#include "lexp/expansions.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "lexp/error.hpp"

namespace lexp {

std::optional<std::size_t> LineExpansion::index_of(Id v, Id e) const {
  if (v >= num_vertices_) return std::nullopt;
  const auto first = nodes_.begin() + static_cast<std::ptrdiff_t>(vertex_offset_[v]);
  const auto last = nodes_.begin() + static_cast<std::ptrdiff_t>(vertex_offset_[v + 1]);
  const auto it = std::lower_bound(first, last, std::pair<Id, Id>{v, e});
  if (it == last || it->second != e) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::vector<Id> LineExpansion::vertex_group(Id v) const {
  std::vector<Id> out;
  for (std::size_t i = vertex_offset_[v]; i < vertex_offset_[v + 1]; ++i)
    out.push_back(static_cast<Id>(i));
  return out;
}

SparseMatrix LineExpansion::adjacency() const {
  std::vector<Triplet> t;
  t.reserve(2 * edges_.size());
  for (const auto& edge : edges_) {
    const double w = edge.kind == LinkKind::vertex_similar ? weights_.w_e : weights_.w_v;
    t.push_back({edge.i, edge.j, w});
    t.push_back({edge.j, edge.i, w});
  }
  return SparseMatrix::from_triplets(nodes_.size(), nodes_.size(), std::move(t));
}

UnlabeledGraph LineExpansion::graph() const {
  std::vector<std::pair<Id, Id>> e;
  e.reserve(edges_.size());
  for (const auto& edge : edges_) e.emplace_back(edge.i, edge.j);
  return UnlabeledGraph(nodes_.size(), std::move(e));
}

LineExpansion build_line_expansion(std::size_t num_vertices, std::size_t num_hyperedges,
                                   std::vector<std::pair<Id, Id>> labels, LineWeights weights) {
  std::sort(labels.begin(), labels.end());
  if (const auto dup = std::adjacent_find(labels.begin(), labels.end()); dup != labels.end())
    throw InvalidInputError("line node label (" + std::to_string(dup->first) + "," +
                            std::to_string(dup->second) + ") appears twice");
  for (auto [v, e] : labels)
    if (v >= num_vertices || e >= num_hyperedges)
      throw InvalidInputError("line node label (" + std::to_string(v) + "," + std::to_string(e) +
                              ") outside the declared hypergraph size");

  LineExpansion le;
  le.num_vertices_ = num_vertices;
  le.num_hyperedges_ = num_hyperedges;
  le.weights_ = weights;
  le.nodes_ = std::move(labels);
  le.vertex_offset_.assign(num_vertices + 1, 0);
  for (auto [v, e] : le.nodes_) ++le.vertex_offset_[v + 1];
  for (std::size_t v = 0; v < num_vertices; ++v) le.vertex_offset_[v + 1] += le.vertex_offset_[v];
  le.edge_groups_.assign(num_hyperedges, {});
  for (std::size_t i = 0; i < le.nodes_.size(); ++i)
    le.edge_groups_[le.nodes_[i].second].push_back(static_cast<Id>(i));

  // Each within-group pair once; a pair of distinct nodes can share at most
  // one of vertex and hyperedge, so the two passes never emit the same link.
  for (std::size_t v = 0; v < num_vertices; ++v)
    for (std::size_t a = le.vertex_offset_[v]; a < le.vertex_offset_[v + 1]; ++a)
      for (std::size_t b = a + 1; b < le.vertex_offset_[v + 1]; ++b)
        le.edges_.push_back({static_cast<Id>(a), static_cast<Id>(b), LinkKind::vertex_similar});
  for (const auto& group : le.edge_groups_)
    for (std::size_t a = 0; a < group.size(); ++a)
      for (std::size_t b = a + 1; b < group.size(); ++b)
        le.edges_.push_back({group[a], group[b], LinkKind::hyperedge_similar});
  std::sort(le.edges_.begin(), le.edges_.end(), [](const LineEdge& x, const LineEdge& y) {
    return x.i != y.i ? x.i < y.i : x.j < y.j;
  });
  return le;
}

LineExpansion line_expand(const Hypergraph& h, double w_v, double w_e) {
  if (!(w_v >= 0.0) || !(w_e >= 0.0)) throw ArgumentError("line_expand: weights must be >= 0");
  if (w_v == 0.0 && w_e == 0.0) throw ArgumentError("line_expand: w_v and w_e are both zero");
  return build_line_expansion(h.num_vertices(), h.num_hyperedges(), h.pairs(), {w_v, w_e});
}

ProjectionSet projections(const Hypergraph& h) {
  const auto report = validate(h);
  if (!report.ok)
    throw InvalidInputError("projections: empty hyperedge " +
                            std::to_string(report.empty_hyperedges.front()));
  const std::size_t nv = h.num_vertices(), ne = h.num_hyperedges();
  const auto pairs = h.pairs();
  const std::size_t nl = pairs.size();

  std::vector<double> inv_edge_mass(nv, 0.0);    // sum_{e ∋ v} 1/delta(e)
  std::vector<double> inv_vertex_mass(ne, 0.0);  // sum_{v ∈ e} 1/d(v)
  for (auto [v, e] : pairs) {
    inv_edge_mass[v] += 1.0 / static_cast<double>(h.hyperedge_degree(e));
    inv_vertex_mass[e] += 1.0 / static_cast<double>(h.vertex_degree(v));
  }

  std::vector<Triplet> pv, pe, pvb, peb, hr;
  for (std::size_t i = 0; i < nl; ++i) {
    const auto [v, e] = pairs[i];
    pv.push_back({i, v, 1.0});
    pe.push_back({i, e, 1.0});
    hr.push_back({i, v, 1.0});
    hr.push_back({i, nv + e, 1.0});
    pvb.push_back({v, i, (1.0 / static_cast<double>(h.hyperedge_degree(e))) / inv_edge_mass[v]});
    peb.push_back({e, i, (1.0 / static_cast<double>(h.vertex_degree(v))) / inv_vertex_mass[e]});
  }
  return ProjectionSet{
      SparseMatrix::from_triplets(nl, nv, std::move(pv)),
      SparseMatrix::from_triplets(nl, ne, std::move(pe)),
      SparseMatrix::from_triplets(nv, nl, std::move(pvb)),
      SparseMatrix::from_triplets(ne, nl, std::move(peb)),
      SparseMatrix::from_triplets(nl, nv + ne, std::move(hr)),
  };
}

SparseMatrix block_gram(const ProjectionSet& p) { return p.stacked.transpose().multiply(p.stacked); }

SparseMatrix adjacency_from_projections(const ProjectionSet& p) {
  const auto gram = p.stacked.multiply(p.stacked.transpose());
  return gram.add_scaled(SparseMatrix::identity(gram.rows()), -2.0);
}

NormalizedOperator renormalized_operator(const LineExpansion& le) {
  if (le.num_nodes() == 0) throw InvalidInputError("renormalized_operator: empty line expansion");
  const auto w = le.weights();
  const double self_loop = w.w_v + w.w_e;
  const auto augmented =
      le.adjacency().add_scaled(SparseMatrix::identity(le.num_nodes()), self_loop);
  auto degree = augmented.row_sums();
  std::vector<double> inv_sqrt(degree.size());
  for (std::size_t i = 0; i < degree.size(); ++i) {
    if (!(degree[i] > 0.0)) throw NumericError("renormalized_operator: nonpositive row sum");
    inv_sqrt[i] = 1.0 / std::sqrt(degree[i]);
  }
  return NormalizedOperator{augmented.scale_rows_cols(inv_sqrt, inv_sqrt), std::move(degree), w.w_v,
                            w.w_e, self_loop};
}

SizeCounts size_formulas(const Hypergraph& h) {
  std::size_t sum_d = 0, sum_delta = 0, pairs_v = 0, pairs_e = 0;
  for (std::size_t d : vertex_degrees(h).values) {
    sum_d += d;
    if (d > 0) pairs_v += d * (d - 1);
  }
  for (std::size_t d : hyperedge_degrees(h).values) {
    sum_delta += d;
    if (d > 0) pairs_e += d * (d - 1);
  }
  return {(sum_d + sum_delta) / 2, pairs_v / 2 + pairs_e / 2};
}

SparseMatrix clique_adjacency(const Hypergraph& h) {
  std::vector<double> degree(h.num_vertices(), 0.0);
  for (auto [v, e] : h.pairs()) degree[v] += static_cast<double>(h.hyperedge_degree(e)) - 1.0;
  std::vector<Triplet> t;
  for (const auto& pins : h.hyperedges())
    for (Id u : pins)
      for (Id v : pins)
        if (u != v) t.push_back({u, v, 1.0});
  auto weights = SparseMatrix::from_triplets(h.num_vertices(), h.num_vertices(), std::move(t));
  std::vector<double> inv_sqrt(h.num_vertices(), 0.0);
  for (std::size_t v = 0; v < degree.size(); ++v)
    if (degree[v] > 0.0) inv_sqrt[v] = 1.0 / std::sqrt(degree[v]);
  return weights.scale_rows_cols(inv_sqrt, inv_sqrt);
}

SparseMatrix star_adjacency(const Hypergraph& h, StarNormalizer normalizer) {
  std::vector<double> degree(h.num_vertices(), 0.0);
  for (auto [v, e] : h.pairs())
    degree[v] += normalizer == StarNormalizer::vertex_degree
                     ? 1.0
                     : 1.0 / static_cast<double>(h.hyperedge_degree(e));
  std::vector<Triplet> t;
  for (const auto& pins : h.hyperedges()) {
    const double delta = static_cast<double>(pins.size());
    for (Id u : pins)
      for (Id v : pins) t.push_back({u, v, 1.0 / (delta * delta)});
  }
  auto numer = SparseMatrix::from_triplets(h.num_vertices(), h.num_vertices(), std::move(t));
  std::vector<double> inv_sqrt(h.num_vertices(), 0.0);
  for (std::size_t v = 0; v < degree.size(); ++v)
    if (degree[v] > 0.0) inv_sqrt[v] = 1.0 / std::sqrt(degree[v]);
  return numer.scale_rows_cols(inv_sqrt, inv_sqrt);
}

SparseMatrix effective_vertex_adjacency(const Hypergraph& h, double w_v, double w_e,
                                        AdjacencyForm form) {
  if (!(w_v >= 0.0) || !(w_e >= 0.0) || (w_v == 0.0 && w_e == 0.0))
    throw ArgumentError("effective_vertex_adjacency: need w_v, w_e >= 0, not both zero");
  if (h.num_vertices() > kMaxAnalysisVertices)
    throw SizeError("effective_vertex_adjacency: " + std::to_string(h.num_vertices()) +
                    " vertices exceeds the analysis limit of " +
                    std::to_string(kMaxAnalysisVertices));
  const auto report = validate(h);
  if (!report.ok)
    throw InvalidInputError("effective_vertex_adjacency: empty hyperedge " +
                            std::to_string(report.empty_hyperedges.front()));
  if (!report.isolated_vertices.empty())
    throw InvalidInputError("effective_vertex_adjacency: vertex " +
                            std::to_string(report.isolated_vertices.front()) +
                            " has degree 0 (zero denominator)");

  const std::size_t nv = h.num_vertices();
  std::vector<double> mass(nv, 0.0);  // sum_e h(u,e) / delta(e)
  for (auto [v, e] : h.pairs()) mass[v] += 1.0 / static_cast<double>(h.hyperedge_degree(e));

  std::vector<Triplet> t;
  for (const auto& pins : h.hyperedges()) {
    const double delta = static_cast<double>(pins.size());
    for (Id u : pins) {
      const double du = static_cast<double>(h.vertex_degree(u));
      for (Id v : pins) {
        double term;
        if (form == AdjacencyForm::random_walk) {
          term = w_v / (delta * (w_v * delta + w_e * du));
        } else {
          const double dv = static_cast<double>(h.vertex_degree(v));
          term = w_v / (delta * std::sqrt(w_v * delta + w_e * du) * std::sqrt(w_v * delta + w_e * dv));
        }
        t.push_back({u, v, term});
      }
    }
  }
  auto numer = SparseMatrix::from_triplets(nv, nv, std::move(t));
  std::vector<double> left(nv), right(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    if (form == AdjacencyForm::random_walk) {
      left[v] = 1.0 / mass[v];
      right[v] = 1.0;
    } else {
      left[v] = right[v] = 1.0 / std::sqrt(mass[v]);
    }
  }
  return numer.scale_rows_cols(left, right);
}

UnlabeledGraph clique_expansion_graph(const Hypergraph& h) {
  std::vector<std::pair<Id, Id>> edges;
  for (const auto& pins : h.hyperedges())
    for (std::size_t a = 0; a < pins.size(); ++a)
      for (std::size_t b = a + 1; b < pins.size(); ++b) edges.emplace_back(pins[a], pins[b]);
  return UnlabeledGraph(h.num_vertices(), std::move(edges));
}

bool GraphDump::fully_labeled() const {
  return std::all_of(labels.begin(), labels.end(), [](const NodeLabel& l) {
    return !l.stripped && l.vertex.has_value() && l.hyperedge.has_value();
  });
}

void write_graph_dump(std::ostream& out, const GraphDump& dump) {
  out << dump.graph.num_nodes() << ' ' << dump.graph.num_edges() << '\n';
  auto token = [&](const std::optional<Id>& id, bool stripped) {
    if (stripped)
      out << '?';
    else if (id)
      out << *id;
    else
      out << '-';
  };
  for (const auto& l : dump.labels) {
    token(l.vertex, l.stripped);
    out << ' ';
    token(l.hyperedge, l.stripped);
    out << '\n';
  }
  for (auto [i, j] : dump.graph.edges()) out << i << ' ' << j << '\n';
}

GraphDump read_graph_dump(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError(line_no, "missing header \"<num_nodes> <num_edges>\"");
  std::size_t n = 0, m = 0;
  {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> n >> m) || (ss >> extra)) throw ParseError(line_no, "malformed dump header");
  }
  GraphDump dump;
  dump.labels.reserve(n);
  auto parse_token = [&](const std::string& tok, NodeLabel& label, std::optional<Id>& slot) {
    if (tok == "?") {
      label.stripped = true;
    } else if (tok != "-") {
      std::size_t pos = 0;
      unsigned long value = 0;
      try {
        value = std::stoul(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size() || tok.empty() || tok[0] == '-' || tok[0] == '+')
        throw ParseError(line_no, "invalid node label token \"" + tok + "\"");
      slot = static_cast<Id>(value);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_line()) throw ParseError(line_no, "expected " + std::to_string(n) + " node lines");
    std::istringstream ss(line);
    std::string a, b, extra;
    if (!(ss >> a >> b) || (ss >> extra)) throw ParseError(line_no, "node line needs two tokens");
    NodeLabel label;
    parse_token(a, label, label.vertex);
    parse_token(b, label, label.hyperedge);
    if (label.stripped) label.vertex = label.hyperedge = std::nullopt;
    dump.labels.push_back(label);
  }
  std::vector<std::pair<Id, Id>> edges;
  edges.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (!next_line()) throw ParseError(line_no, "expected " + std::to_string(m) + " edge lines");
    std::istringstream ss(line);
    std::size_t i = 0, j = 0;
    std::string extra;
    if (!(ss >> i >> j) || (ss >> extra)) throw ParseError(line_no, "malformed edge line");
    if (i >= n || j >= n || i == j) throw ParseError(line_no, "edge endpoint out of range or self-loop");
    edges.emplace_back(static_cast<Id>(i), static_cast<Id>(j));
  }
  if (next_line()) throw ParseError(line_no, "unexpected content after the declared edges");
  dump.graph = UnlabeledGraph(n, std::move(edges));
  if (dump.graph.num_edges() != m) throw ParseError(line_no, "duplicate edges in dump");
  return dump;
}

GraphDump line_expansion_dump(const LineExpansion& le, bool labeled) {
  GraphDump dump;
  dump.labels.reserve(le.num_nodes());
  for (auto [v, e] : le.nodes()) {
    NodeLabel l;
    if (labeled) {
      l.vertex = v;
      l.hyperedge = e;
    } else {
      l.stripped = true;
    }
    dump.labels.push_back(l);
  }
  dump.graph = le.graph();
  return dump;
}

GraphDump clique_expansion_dump(const Hypergraph& h) {
  GraphDump dump;
  for (std::size_t v = 0; v < h.num_vertices(); ++v)
    dump.labels.push_back(NodeLabel{static_cast<Id>(v), std::nullopt, false});
  dump.graph = clique_expansion_graph(h);
  return dump;
}

GraphDump star_expansion_dump(const Hypergraph& h) {
  GraphDump dump;
  for (std::size_t v = 0; v < h.num_vertices(); ++v)
    dump.labels.push_back(NodeLabel{static_cast<Id>(v), std::nullopt, false});
  for (std::size_t e = 0; e < h.num_hyperedges(); ++e)
    dump.labels.push_back(NodeLabel{std::nullopt, static_cast<Id>(e), false});
  const auto star = star_expansion(h);
  dump.graph = UnlabeledGraph(star.num_vertices + star.num_hyperedges, star.edges);
  return dump;
}

LineExpansion line_expansion_from_dump(const GraphDump& dump) {
  if (!dump.fully_labeled())
    throw InvalidInputError("line expansion dump lacks (vertex, hyperedge) labels on some nodes");
  std::vector<std::pair<Id, Id>> labels;
  std::size_t nv = 0, ne = 0;
  for (const auto& l : dump.labels) {
    labels.emplace_back(*l.vertex, *l.hyperedge);
    nv = std::max<std::size_t>(nv, *l.vertex + 1);
    ne = std::max<std::size_t>(ne, *l.hyperedge + 1);
  }
  auto le = build_line_expansion(nv, ne, labels, {1.0, 1.0});
  // Dump node k is line node position[k] of the canonical ordering.
  std::vector<Id> position(labels.size());
  for (std::size_t k = 0; k < labels.size(); ++k)
    position[k] = static_cast<Id>(*le.index_of(labels[k].first, labels[k].second));
  std::vector<std::pair<Id, Id>> mapped;
  for (auto [i, j] : dump.graph.edges()) mapped.emplace_back(position[i], position[j]);
  const UnlabeledGraph relabeled(labels.size(), std::move(mapped));
  if (!(relabeled == le.graph()))
    throw InvalidInputError("dump edges disagree with the line expansion implied by its labels");
  return le;
}

}  // namespace lexp
