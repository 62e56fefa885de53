#include "lexp/checks.hpp"

#include "lexp/canon.hpp"
#include "lexp/error.hpp"
#include "lexp/graph.hpp"
#include "lexp/reconstruction.hpp"

namespace lexp {
namespace {

EquivalenceReport structural(const char* lhs, const char* rhs, bool same, const Hypergraph& h,
                             std::optional<std::uint64_t> seed) {
  return make_report(lhs, rhs, "", same ? 0.0 : 1.0, 0.0, h.num_vertices(), h.num_hyperedges(),
                     seed);
}

}  // namespace

EquivalenceReport check_block_gram(const Hypergraph& h, std::optional<std::uint64_t> seed) {
  const std::size_t nv = h.num_vertices(), ne = h.num_hyperedges();
  std::vector<Triplet> t;
  for (std::size_t v = 0; v < nv; ++v)
    t.push_back({v, v, static_cast<double>(h.vertex_degree(v))});
  for (std::size_t e = 0; e < ne; ++e)
    t.push_back({nv + e, nv + e, static_cast<double>(h.hyperedge_degree(e))});
  for (auto [v, e] : h.pairs()) {
    t.push_back({v, nv + e, 1.0});
    t.push_back({nv + e, v, 1.0});
  }
  const auto expected = SparseMatrix::from_triplets(nv + ne, nv + ne, std::move(t));
  const auto gram = block_gram(projections(h));
  return make_report("HrT_Hr", "[[Dv,H],[HT,De]]", "exact", max_abs_diff(gram, expected), 0.0, nv,
                     ne, seed);
}

EquivalenceReport check_projection_adjacency(const Hypergraph& h,
                                             std::optional<std::uint64_t> seed) {
  const auto from_proj = adjacency_from_projections(projections(h));
  const auto direct = line_expand(h, 1.0, 1.0).adjacency();
  return make_report("Hr_HrT-2I", "line_adjacency", "exact", max_abs_diff(from_proj, direct), 0.0,
                     h.num_vertices(), h.num_hyperedges(), seed);
}

EquivalenceReport check_size_formulas(const Hypergraph& h, std::optional<std::uint64_t> seed) {
  const auto le = line_expand(h);
  const auto sizes = size_formulas(h);
  const bool same = sizes.line_nodes == le.num_nodes() && sizes.line_edges == le.num_edges();
  return structural("size_formulas", "constructed_line_expansion", same, h, seed);
}

EquivalenceReport check_line_graph_of_star(const Hypergraph& h,
                                           std::optional<std::uint64_t> seed) {
  const auto star = star_expansion(h);
  const auto lg = line_graph(star.num_vertices + star.num_hyperedges, star.edges);
  const auto le = line_expand(h).graph();
  return structural("line_expansion", "line_graph(star_expansion)", graphs_isomorphic(le, lg), h,
                    seed);
}

EquivalenceReport check_labeled_round_trip(const Hypergraph& h,
                                           std::optional<std::uint64_t> seed) {
  return structural("back_project(line_expand(h))", "h",
                    back_project_labeled(line_expand(h)) == h, h, seed);
}

std::optional<EquivalenceReport> check_unlabeled_round_trip(const Hypergraph& h,
                                                            std::optional<std::uint64_t> seed) {
  bool all = true;
  for (const auto& comp : connected_components(h)) {
    const auto piece = restrict_to(h, comp);
    if (piece.num_pairs() == 0) continue;
    if (piece.num_pairs() > kMaxKrauszNodes ||
        std::min(piece.num_vertices(), piece.num_hyperedges()) > kMaxIsomorphismSide)
      return std::nullopt;
    const auto rec = krausz_reconstruct(line_expand(piece).graph());
    if (!hypergraph_isomorphic(rec.candidates[0], piece) &&
        !hypergraph_isomorphic(rec.candidates[1], piece))
      all = false;
  }
  return structural("krausz_reconstruct(strip(line_expand(h)))", "h (up to isomorphism)", all, h,
                    seed);
}

EquivalenceReport check_dump(const GraphDump& dump) {
  bool ok = true;
  std::size_t nv = 0, ne = 0;
  try {
    const auto le = line_expansion_from_dump(dump);
    nv = le.num_vertices();
    ne = le.num_hyperedges();
  } catch (const InvalidInputError&) {
    ok = false;
  }
  return make_report("dump", "line_expand(labels)", "", ok ? 0.0 : 1.0, 0.0, nv, ne, std::nullopt);
}

}  // namespace lexp
