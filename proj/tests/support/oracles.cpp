#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lexp/random.hpp"

namespace oracle {

using lexp::Hypergraph;
using lexp::Id;
using lexp::Matrix;

Hypergraph worked_example() { return Hypergraph(5, {{0, 1}, {0, 1, 2}, {2, 3, 4}}); }

namespace {

bool has(const Hypergraph& h, std::size_t v, std::size_t e) {
  const auto& p = h.pins(e);
  return std::find(p.begin(), p.end(), static_cast<Id>(v)) != p.end();
}

double hv(const Hypergraph& h, std::size_t v, std::size_t e) { return has(h, v, e) ? 1.0 : 0.0; }

}  // namespace

std::vector<std::size_t> vertex_degrees(const Hypergraph& h) {
  std::vector<std::size_t> d(h.num_vertices(), 0);
  for (std::size_t v = 0; v < h.num_vertices(); ++v)
    for (std::size_t e = 0; e < h.num_hyperedges(); ++e) d[v] += has(h, v, e);
  return d;
}

std::vector<std::size_t> hyperedge_degrees(const Hypergraph& h) {
  std::vector<std::size_t> d(h.num_hyperedges(), 0);
  for (std::size_t v = 0; v < h.num_vertices(); ++v)
    for (std::size_t e = 0; e < h.num_hyperedges(); ++e) d[e] += has(h, v, e);
  return d;
}

Matrix clique(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const auto delta = oracle::hyperedge_degrees(h);
  std::vector<double> dc(n, 0.0);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t e = 0; e < h.num_hyperedges(); ++e) dc[u] += hv(h, u, e) * (delta[e] - 1.0);
  Matrix a(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v || dc[u] == 0.0 || dc[v] == 0.0) continue;
      double w = 0.0;
      for (std::size_t e = 0; e < h.num_hyperedges(); ++e) w += hv(h, u, e) * hv(h, v, e);
      a(u, v) = w / std::sqrt(dc[u] * dc[v]);
    }
  return a;
}

Matrix star_weighted(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const auto delta = oracle::hyperedge_degrees(h);
  Matrix a(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      double num = 0.0, du = 0.0, dv = 0.0;
      for (std::size_t e = 0; e < h.num_hyperedges(); ++e) {
        if (delta[e] == 0) continue;
        const double de = static_cast<double>(delta[e]);
        num += hv(h, u, e) * hv(h, v, e) / (de * de);
        du += hv(h, u, e) / de;
        dv += hv(h, v, e) / de;
      }
      if (du > 0.0 && dv > 0.0) a(u, v) = num / (std::sqrt(du) * std::sqrt(dv));
    }
  return a;
}

Matrix modified_clique(const Hypergraph& h) {
  const std::size_t n = h.num_vertices();
  const auto delta = oracle::hyperedge_degrees(h);
  Matrix a(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v) continue;
      double num = 0.0, du = 0.0, dv = 0.0;
      for (std::size_t e = 0; e < h.num_hyperedges(); ++e) {
        const double k = static_cast<double>(delta[e]) - 1.0;
        num += hv(h, u, e) * hv(h, v, e) / (k * k);
        du += hv(h, u, e) / k;
        dv += hv(h, v, e) / k;
      }
      if (du > 0.0 && dv > 0.0) a(u, v) = num / (std::sqrt(du) * std::sqrt(dv));
    }
  return a;
}

Matrix effective_symmetric(const Hypergraph& h, double w_v, double w_e) {
  const std::size_t n = h.num_vertices();
  const auto d = oracle::vertex_degrees(h);
  const auto delta = oracle::hyperedge_degrees(h);
  Matrix a(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      double num = 0.0, mu = 0.0, mv = 0.0;
      for (std::size_t e = 0; e < h.num_hyperedges(); ++e) {
        const double de = static_cast<double>(delta[e]);
        num += w_v * hv(h, u, e) * hv(h, v, e) /
               (de * std::sqrt(w_v * de + w_e * d[u]) * std::sqrt(w_v * de + w_e * d[v]));
        mu += hv(h, u, e) / de;
        mv += hv(h, v, e) / de;
      }
      a(u, v) = num / (std::sqrt(mu) * std::sqrt(mv));
    }
  return a;
}

Matrix effective_random_walk(const Hypergraph& h, double w_v, double w_e) {
  const std::size_t n = h.num_vertices();
  const auto d = oracle::vertex_degrees(h);
  const auto delta = oracle::hyperedge_degrees(h);
  Matrix a(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      double num = 0.0, mu = 0.0;
      for (std::size_t e = 0; e < h.num_hyperedges(); ++e) {
        const double de = static_cast<double>(delta[e]);
        num += w_v * hv(h, u, e) * hv(h, v, e) / (de * (w_v * de + w_e * d[u]));
        mu += hv(h, u, e) / de;
      }
      a(u, v) = num / mu;
    }
  return a;
}

Matrix gcn(const lexp::UnlabeledGraph& g) {
  const std::size_t n = g.num_nodes();
  Matrix a(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && g.adjacent(u, v))
        a(u, v) = 1.0 / std::sqrt(static_cast<double>(g.degree(u) * g.degree(v)));
  return a;
}

bool isomorphic_brute(const Hypergraph& a, const Hypergraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_hyperedges() != b.num_hyperedges())
    return false;
  std::vector<Id> pv(a.num_vertices()), pe(a.num_hyperedges());
  std::iota(pv.begin(), pv.end(), Id{0});
  do {
    std::iota(pe.begin(), pe.end(), Id{0});
    do {
      bool ok = true;
      for (std::size_t v = 0; v < a.num_vertices() && ok; ++v)
        for (std::size_t e = 0; e < a.num_hyperedges() && ok; ++e)
          ok = has(a, v, e) == has(b, pv[v], pe[e]);
      if (ok) return true;
    } while (std::next_permutation(pe.begin(), pe.end()));
  } while (std::next_permutation(pv.begin(), pv.end()));
  return false;
}

std::vector<Hypergraph> all_hypergraphs(std::size_t nv, std::size_t ne) {
  const std::size_t subsets = std::size_t{1} << nv;
  std::size_t total = 1;
  for (std::size_t i = 0; i < ne; ++i) total *= subsets;
  std::vector<Hypergraph> out;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::vector<Id>> edges;
    std::size_t c = code;
    for (std::size_t e = 0; e < ne; ++e) {
      const std::size_t mask = c % subsets;
      c /= subsets;
      std::vector<Id> pins;
      for (std::size_t v = 0; v < nv; ++v)
        if (mask & (std::size_t{1} << v)) pins.push_back(static_cast<Id>(v));
      edges.push_back(std::move(pins));
    }
    out.emplace_back(nv, std::move(edges));
  }
  return out;
}

std::vector<lexp::UnlabeledGraph> all_graphs(std::size_t n) {
  std::vector<std::pair<Id, Id>> slots;
  for (Id a = 0; a < n; ++a)
    for (Id b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::vector<lexp::UnlabeledGraph> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<Id, Id>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask & (std::size_t{1} << i)) edges.push_back(slots[i]);
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

lexp::UnlabeledGraph permute(const lexp::UnlabeledGraph& g, const std::vector<Id>& perm) {
  std::vector<std::pair<Id, Id>> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(perm[a], perm[b]);
  return lexp::UnlabeledGraph(g.num_nodes(), std::move(edges));
}

Hypergraph permute(const Hypergraph& h, const std::vector<Id>& vertex_perm,
                   const std::vector<Id>& edge_perm) {
  std::vector<std::vector<Id>> edges(h.num_hyperedges());
  for (std::size_t e = 0; e < h.num_hyperedges(); ++e)
    for (Id v : h.pins(e)) edges[edge_perm[e]].push_back(vertex_perm[v]);
  return Hypergraph(h.num_vertices(), std::move(edges));
}

std::vector<Id> random_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<Id> p(n);
  std::iota(p.begin(), p.end(), Id{0});
  lexp::Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[rng.below(i)]);
  return p;
}

}  // namespace oracle
