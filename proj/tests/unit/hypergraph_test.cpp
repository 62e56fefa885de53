#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "lexp/error.hpp"
#include "lexp/hypergraph.hpp"
#include "oracles.hpp"

using namespace lexp;

TEST(Parse, IsolatedVertexNoHyperedges) {
  const auto h = parse_hypergraph("1 0\n");
  EXPECT_EQ(h.num_vertices(), 1u);
  EXPECT_EQ(h.num_hyperedges(), 0u);
  EXPECT_EQ(vertex_degrees(h).values, std::vector<std::size_t>{0});
  EXPECT_TRUE(hyperedge_degrees(h).values.empty());
}

TEST(Parse, DuplicateVertexNamesTheLine) {
  try {
    parse_hypergraph("3 1\n0 0 1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Parse, RejectsMalformedInput) {
  EXPECT_THROW(parse_hypergraph(""), ParseError);
  EXPECT_THROW(parse_hypergraph("x 1\n0\n"), ParseError);
  EXPECT_THROW(parse_hypergraph("3\n"), ParseError);
  EXPECT_THROW(parse_hypergraph("2 1\n0 2\n"), ParseError);
  EXPECT_THROW(parse_hypergraph("2 1\n0 -1\n"), ParseError);
  EXPECT_THROW(parse_hypergraph("2 1\n0 1\n1\n"), ParseError);
  EXPECT_THROW(parse_hypergraph("2 2\n0 1\n"), ParseError);
}

TEST(Parse, SkipsCommentsBlankLinesAndCrlf) {
  const auto h = parse_hypergraph("# header comment\r\n5 3\r\n\r\n0 1\r\n# mid\r\n0 1 2\r\n2 3 4\r\n");
  EXPECT_EQ(h, oracle::worked_example());
}

TEST(Parse, EmptyHyperedgeToken) {
  const auto h = parse_hypergraph("2 2\n-\n0 1\n");
  EXPECT_EQ(h.hyperedge_degree(0), 0u);
  EXPECT_EQ(render_hypergraph(h), "2 2\n-\n0 1\n");
}

TEST(Parse, RoundTripOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto h = random_hypergraph(1 + seed % 20, seed % 15, 0.05 + (seed % 7) * 0.1, seed);
    EXPECT_EQ(parse_hypergraph(render_hypergraph(h)), h) << "seed " << seed;
  }
}

TEST(Hypergraph, BothIndexesDescribeTheSameRelation) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto h = random_hypergraph(12, 9, 0.3, seed);
    std::size_t count = 0;
    for (std::size_t v = 0; v < h.num_vertices(); ++v)
      for (Id e : h.incident_edges(v)) {
        EXPECT_TRUE(h.contains(v, e));
        const auto& pins = h.pins(e);
        EXPECT_TRUE(std::binary_search(pins.begin(), pins.end(), static_cast<Id>(v)));
        ++count;
      }
    EXPECT_EQ(count, h.num_pairs());
  }
}

TEST(Hypergraph, RejectsBadConstruction) {
  EXPECT_THROW(Hypergraph(2, {{0, 2}}), ArgumentError);
  EXPECT_THROW(Hypergraph(2, {{1, 1}}), ArgumentError);
}

TEST(Degrees, MatchBruteForceAndHandshake) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto h = random_hypergraph(1 + seed % 20, 1 + seed % 15, 0.25, seed);
    const auto dv = vertex_degrees(h);
    const auto de = hyperedge_degrees(h);
    EXPECT_EQ(dv.values, oracle::vertex_degrees(h));
    EXPECT_EQ(de.values, oracle::hyperedge_degrees(h));
    EXPECT_EQ(dv.total(), h.num_pairs());
    EXPECT_EQ(de.total(), h.num_pairs());
  }
}

TEST(Incidence, IsolatedVertexGivesZeroRow) {
  const auto h = parse_hypergraph("3 1\n0 2\n");
  const auto m = incidence_matrix(h).to_dense();
  EXPECT_EQ(m(1, 0), 0.0);
  EXPECT_EQ(m(0, 0), 1.0);
  EXPECT_EQ(m(2, 0), 1.0);
}

TEST(Validate, Reports) {
  EXPECT_TRUE(validate(oracle::worked_example()).ok);
  EXPECT_TRUE(validate(oracle::worked_example()).duplicate_hyperedges.empty());

  const auto empty = parse_hypergraph("3 2\n0 1\n-\n");
  const auto r = validate(empty);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.empty_hyperedges, std::vector<Id>{1});
  EXPECT_EQ(r.isolated_vertices, std::vector<Id>{2});
  EXPECT_NE(r.summary().find("1"), std::string::npos);

  const auto dup = parse_hypergraph("3 2\n0 1\n0 1\n");
  const auto d = validate(dup);
  EXPECT_TRUE(d.ok);
  ASSERT_EQ(d.duplicate_hyperedges.size(), 1u);
  EXPECT_EQ(d.duplicate_hyperedges[0], (std::pair<Id, Id>{0, 1}));
}

TEST(RandomHypergraph, FullProbabilityGivesCompleteIncidence) {
  const auto h = random_hypergraph(5, 3, 1.0, 99);
  for (std::size_t e = 0; e < 3; ++e) EXPECT_EQ(h.hyperedge_degree(e), 5u);
}

TEST(RandomHypergraph, Deterministic) {
  EXPECT_EQ(random_hypergraph(20, 15, 0.2, 7), random_hypergraph(20, 15, 0.2, 7));
  EXPECT_NE(render_hypergraph(random_hypergraph(20, 15, 0.2, 7)),
            render_hypergraph(random_hypergraph(20, 15, 0.2, 8)));
}

TEST(RandomHypergraph, NoEmptyHyperedges) {
  for (std::uint64_t seed = 0; seed < 100; ++seed)
    EXPECT_TRUE(validate(random_hypergraph(6, 10, 0.01, seed)).ok);
}

TEST(RandomHypergraph, RejectsBadArguments) {
  EXPECT_THROW(random_hypergraph(0, 3, 0.5, 1), ArgumentError);
  EXPECT_THROW(random_hypergraph(3, 3, 0.0, 1), ArgumentError);
  EXPECT_THROW(random_hypergraph(3, 3, 1.5, 1), ArgumentError);
}

// Pair density over 100 seeds of (20, 15, 0.2) lies in the 99% binomial
// interval. Redrawing empty hyperedges moves the expected density to
// 0.2 / (1 - 0.8^20) ~ 0.2023, inside the +-0.006 interval.
TEST(RandomHypergraph, PairDensityWithinBinomialInterval) {
  std::size_t pairs = 0;
  const std::size_t trials = 100, slots = 20 * 15;
  for (std::uint64_t seed = 0; seed < trials; ++seed) pairs += random_hypergraph(20, 15, 0.2, seed).num_pairs();
  const double n = static_cast<double>(trials * slots);
  const double mean = static_cast<double>(pairs) / n;
  const double half_width = 2.576 * std::sqrt(0.2 * 0.8 / n);
  EXPECT_NEAR(mean, 0.2, half_width);
}

TEST(Components, SplitsDisjointPieces) {
  const auto h = parse_hypergraph("6 3\n0 1\n2 3\n1 4\n");
  const auto comps = connected_components(h);
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0].vertices, (std::vector<Id>{0, 1, 4}));
  EXPECT_EQ(comps[0].hyperedges, (std::vector<Id>{0, 2}));
  EXPECT_EQ(comps[1].vertices, (std::vector<Id>{2, 3}));
  EXPECT_EQ(comps[2].vertices, (std::vector<Id>{5}));
  EXPECT_TRUE(comps[2].hyperedges.empty());
  const auto piece = restrict_to(h, comps[0]);
  EXPECT_EQ(piece, parse_hypergraph("3 2\n0 1\n1 2\n"));
}

TEST(Dual, IsAnInvolution) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto h = random_hypergraph(7, 5, 0.4, seed);
    EXPECT_EQ(dual(dual(h)), h);
    EXPECT_EQ(dual(h).num_vertices(), h.num_hyperedges());
  }
}

TEST(Compact, DropsEmptyAndIsolated) {
  const auto h = parse_hypergraph("4 3\n0 2\n-\n2\n");
  const auto c = compact(h);
  EXPECT_EQ(c, parse_hypergraph("2 2\n0 1\n1\n"));
}
