// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "lexp/canon.hpp"
#include "lexp/checks.hpp"
#include "lexp/expansions.hpp"
#include "lexp/gcn.hpp"
#include "lexp/random.hpp"
#include "lexp/reconstruction.hpp"
#include "lexp/unify.hpp"
#include "lexp/zoo.hpp"

#ifndef LEXP_SOURCE_DIR
#define LEXP_SOURCE_DIR "."
#endif

using namespace lexp;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* name, double time_limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (time_limit > 0 && secs >= time_limit) {
    out.ok = false;
    out.detail += " (over the " + std::to_string(time_limit) + " s limit)";
  }
  if (!out.ok) ++failures;
  std::printf("%s  %2d  %-34s %-58s %.3f s\n", out.ok ? "PASS" : "FAIL", id, name,
              out.detail.c_str(), secs);
  std::fflush(stdout);
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

const Hypergraph& example() {
  static const Hypergraph h = parse_hypergraph("5 3\n0 1\n0 1 2\n2 3 4\n");
  return h;
}

// Seeded corpus with |V| <= 20, |E| <= 15.
std::vector<Hypergraph> random_corpus(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Hypergraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    const auto nv = 1 + rng.below(20);
    const auto ne = 1 + rng.below(15);
    out.push_back(random_hypergraph(nv, ne, rng.uniform(0.05, 0.6), rng.next_u64()));
  }
  return out;
}

Outcome projection_identities() {
  auto corpus = random_corpus(200, 1);
  corpus.insert(corpus.begin(), example());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto a = check_block_gram(corpus[i], i);
    const auto b = check_projection_adjacency(corpus[i], i);
    if (!a.pass || !b.pass) return {false, "instance " + std::to_string(i) + ": " + a.text()};
  }
  return {true, std::to_string(corpus.size()) + " hypergraphs, exact"};
}

Outcome golden_matrices() {
  auto same = [](const SparseMatrix& m, const std::vector<std::vector<double>>& rows) {
    return m.to_dense() == Matrix::from_rows(rows);
  };
  const auto& h = example();
  const auto p = projections(h);
  const auto le = line_expand(h);
  std::vector<std::string> bad;
  if (!same(incidence_matrix(h), {{1, 1, 0}, {1, 1, 0}, {0, 1, 1}, {0, 0, 1}, {0, 0, 1}}))
    bad.push_back("H");
  if (vertex_degrees(h).values != std::vector<std::size_t>{2, 2, 2, 1, 1}) bad.push_back("D_v");
  if (hyperedge_degrees(h).values != std::vector<std::size_t>{2, 3, 3}) bad.push_back("D_e");
  const std::vector<std::vector<double>> pv{{1, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0, 0, 0},
                                            {0, 0, 0, 0, 1, 1, 0, 0}, {0, 0, 0, 0, 0, 0, 1, 0},
                                            {0, 0, 0, 0, 0, 0, 0, 1}};
  const std::vector<std::vector<double>> pe{
      {1, 0, 1, 0, 0, 0, 0, 0}, {0, 1, 0, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 1, 1}};
  if (!same(p.vertex.transpose(), pv)) bad.push_back("P_v");
  if (!same(p.hyperedge.transpose(), pe)) bad.push_back("P_e");
  auto hr = pv;
  hr.insert(hr.end(), pe.begin(), pe.end());
  if (!same(p.stacked.transpose(), hr)) bad.push_back("H_r");
  const std::vector<std::vector<double>> al{
      {0, 1, 1, 0, 0, 0, 0, 0}, {1, 0, 0, 1, 1, 0, 0, 0}, {1, 0, 0, 1, 0, 0, 0, 0},
      {0, 1, 1, 0, 1, 0, 0, 0}, {0, 1, 0, 1, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0, 1, 1},
      {0, 0, 0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 0, 1, 1, 0}};
  if (!same(le.adjacency(), al) || !same(adjacency_from_projections(p), al)) bad.push_back("A_l");
  if (bad.empty()) return {true, "H, D_v, D_e, P_v, P_e, H_r, A_l match"};
  std::string names;
  for (const auto& b : bad) names += b + " ";
  return {false, "mismatch: " + names};
}

Outcome size_formulas_hold() {
  if (!(size_formulas(example()) == SizeCounts{8, 10})) return {false, "worked example"};
  const auto corpus = random_corpus(200, 1);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (!check_size_formulas(corpus[i], i).pass) return {false, "instance " + std::to_string(i)};
  return {true, "(8, 10) on the example, 200 random exact"};
}

Outcome line_graph_of_star() {
  Rng rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto h = random_hypergraph(1 + rng.below(12), 1 + rng.below(10), rng.uniform(0.1, 0.5),
                                     rng.next_u64());
    if (!check_line_graph_of_star(h, i).pass) return {false, "instance " + std::to_string(i)};
  }
  return {true, "50 hypergraphs, canonical forms equal"};
}

Outcome star_equivalence() {
  Rng rng(5);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    Hypergraph h;
    do {
      h = compact(random_hypergraph(1 + rng.below(20), 1 + rng.below(15), rng.uniform(0.05, 0.6),
                                    rng.next_u64()));
    } while (h.num_vertices() == 0);
    const auto r = check_star_equivalence(h, kDefaultTolerance);
    worst = std::max(worst, r.max_diff);
    if (!r.pass) return {false, r.text()};
  }
  return {true, "200 hypergraphs, max diff " + fmt("%.2e", worst)};
}

Outcome simple_graph_factor() {
  const UnlabeledGraph k3(3, {{0, 1}, {0, 2}, {1, 2}});
  const UnlabeledGraph edge(2, {{0, 1}});
  const double le_k3 = degraded_line_adjacency(as_hypergraph(k3)).at(0, 1);
  const double gcn_k3 = simple_graph_adjacency(k3).at(0, 1);
  const double le_edge = degraded_line_adjacency(as_hypergraph(edge)).at(0, 1);
  const double gcn_edge = simple_graph_adjacency(edge).at(0, 1);
  if (std::abs(le_k3 - 0.25) > 1e-12 || std::abs(gcn_k3 - 0.5) > 1e-12)
    return {false, "K3 gave " + fmt("%.17g", le_k3) + " vs " + fmt("%.17g", gcn_k3)};
  if (std::abs(le_edge - 0.5) > 1e-12 || std::abs(gcn_edge - 1.0) > 1e-12)
    return {false, "single edge gave " + fmt("%.17g", le_edge) + " vs " + fmt("%.17g", gcn_edge)};
  std::vector<UnlabeledGraph> graphs{k3, edge};
  Rng rng(6);
  for (int i = 0; i < 50; ++i)
    graphs.push_back(random_connected_graph(2 + rng.below(49), rng.uniform(0.02, 0.3), rng.next_u64()));
  double worst = 0.0;
  for (const auto& g : graphs) {
    const auto r = check_simple_graph_factor(g, kDefaultTolerance);
    worst = std::max(worst, r.max_diff);
    if (!r.pass) return {false, r.text()};
  }
  return {true, "K3, single edge, 50 graphs, max diff " + fmt("%.2e", worst)};
}

Outcome reconstruction() {
  const auto corpus = random_corpus(200, 1);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (!check_labeled_round_trip(corpus[i], i).pass)
      return {false, "labeled round trip failed on instance " + std::to_string(i)};
  Rng rng(7);
  int done = 0;
  while (done < 50) {
    const auto h = compact(random_hypergraph(1 + rng.below(8), 1 + rng.below(6),
                                             rng.uniform(0.2, 0.6), rng.next_u64()));
    if (h.num_pairs() == 0 || connected_components(h).size() != 1) continue;
    const auto r = check_unlabeled_round_trip(h, done);
    if (!r) return {false, "instance " + std::to_string(done) + " beyond search limits"};
    if (!r->pass) return {false, "no isomorphic candidate for:\n" + render_hypergraph(h)};
    ++done;
  }
  return {true, "200 labeled exact, 50 connected unlabeled"};
}

Outcome gradient_check() {
  Rng rng(8);
  Hypergraph h;
  do {
    h = random_hypergraph(10, 6, 0.35, rng.next_u64());
  } while (!validate(h).isolated_vertices.empty());
  Matrix x(10, 4);
  for (auto& v : x.data()) v = rng.uniform(-1.0, 1.0);
  std::vector<std::optional<std::size_t>> labels(10);
  Split split;
  for (Id v = 0; v < 10; ++v) {
    labels[v] = v % 3;
    (v < 7 ? split.train : split.test).push_back(v);
  }
  const auto data = assemble_dataset(x, labels, split);
  const auto ctx = prepare_context(h, {1.0, 1.0});
  const double wd = 1e-3;
  const auto model = init_model(4, 6, 3, 2, 9);
  const auto pass = forward(ctx, ctx.op.matrix, model, data.features);
  const auto grads = backward(ctx, ctx.op.matrix.transpose(), model, pass, data, wd);

  const double step = 1e-5;
  double worst = 0.0;
  std::size_t count = 0;
  for (std::size_t k = 0; k < model.thetas.size(); ++k)
    for (std::size_t i = 0; i < model.thetas[k].data().size(); ++i) {
      Model plus = model, minus = model;
      plus.thetas[k].data()[i] += step;
      minus.thetas[k].data()[i] -= step;
      const double fp = objective(forward(ctx, ctx.op.matrix, plus, x), plus, data, wd);
      const double fm = objective(forward(ctx, ctx.op.matrix, minus, x), minus, data, wd);
      const double numeric = (fp - fm) / (2 * step);
      const double analytic = grads[k].data()[i];
      const double scale = std::max(std::abs(numeric), std::abs(analytic));
      const double rel = scale == 0.0 ? 0.0 : std::abs(numeric - analytic) / scale;
      worst = std::max(worst, rel);
      ++count;
    }
  return {worst < 1e-5, std::to_string(count) + " parameters, max rel err " + fmt("%.2e", worst)};
}

Outcome sampling_unbiased() {
  // One hyperedge of 21 vertices: every line node has 20 hyperedge-similar
  // neighbours, thinned to 4.
  std::vector<Id> pins;
  for (Id v = 0; v < 21; ++v) pins.push_back(v);
  const auto le = line_expand(Hypergraph(21, {pins}));
  Rng rng(10);
  std::vector<double> signal(le.num_nodes());
  for (auto& s : signal) s = rng.uniform(-1.0, 2.0);
  double exact = 0.0;
  for (Id j = 1; j < 21; ++j) exact += signal[j];

  const int draws = 10000;
  const SamplingConfig cfg{8, 4};
  double sum = 0.0, sumsq = 0.0;
  for (int d = 0; d < draws; ++d) {
    const auto s = sample_neighbors(le, 0, cfg, rng);
    if (s.hyperedge_side.size() != 4) return {false, "sample size is not the threshold"};
    double agg = 0.0;
    for (Id j : s.hyperedge_side) agg += signal[j];
    agg *= s.hyperedge_scale;
    sum += agg;
    sumsq += agg * agg;
  }
  const double mean = sum / draws;
  const double se = std::sqrt((sumsq / draws - mean * mean) / (draws - 1));
  const double z = std::abs(mean - exact) / se;
  return {z <= 3.0, "|mean - exact| = " + fmt("%.2f", z) + " standard errors"};
}

Outcome scale_invariance() {
  std::vector<Hypergraph> hs{example()};
  for (const auto& h : random_corpus(20, 11)) hs.push_back(h);
  double worst = 0.0;
  for (const auto& h : hs) {
    const auto a = renormalized_operator(line_expand(h, 1.0, 2.0)).matrix;
    const auto b = renormalized_operator(line_expand(h, 3.0, 6.0)).matrix;
    worst = std::max(worst, max_abs_diff(a, b));
  }
  return {worst <= 1e-12, std::to_string(hs.size()) + " hypergraphs, max diff " + fmt("%.2e", worst)};
}

Outcome desk_training() {
  const auto zoo_path = find_zoo_file(LEXP_SOURCE_DIR);
  if (zoo_path) {
    std::ifstream in(*zoo_path);
    const auto zoo = read_zoo(in, 0);
    TrainConfig cfg;
    cfg.lr = 0.2;
    cfg.hidden = 16;
    cfg.epochs = 2000;
    const auto r = train(zoo.hypergraph, zoo.data, cfg);
    return {!r.report.diverged && r.report.test_accuracy >= 0.90,
            "Zoo test accuracy " + fmt("%.4f", r.report.test_accuracy) + " on " +
                std::to_string(r.report.test_count) + " animals"};
  }
  const auto toy = separable_toy();
  TrainConfig cfg;
  cfg.lr = 0.1;
  const auto r = train(toy.hypergraph, toy.data, cfg);
  return {!r.report.diverged && r.report.test_accuracy == 1.0,
          "Zoo file absent; toy test accuracy " + fmt("%.4f", r.report.test_accuracy)};
}

}  // namespace

int main() {
  run(1, "projection identities", 5.0, projection_identities);
  run(2, "worked example matrices", 0.0, golden_matrices);
  run(3, "size formulas", 0.0, size_formulas_hold);
  run(4, "line graph of the star expansion", 10.0, line_graph_of_star);
  run(5, "degraded line vs weighted star", 0.0, star_equivalence);
  run(6, "degraded line vs simple graph / 2", 0.0, simple_graph_factor);
  run(7, "labeled and unlabeled round trip", 60.0, reconstruction);
  run(8, "gradient check", 0.0, gradient_check);
  run(9, "sampling unbiasedness", 0.0, sampling_unbiased);
  run(10, "weight-ratio invariance", 0.0, scale_invariance);
  run(11, "desk-scale training", 60.0, desk_training);
  std::printf("%d of 11 criteria passed\n", 11 - failures);
  return failures == 0 ? 0 : 1;
}
