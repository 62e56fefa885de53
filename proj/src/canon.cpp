#include "lexp/canon.hpp"

#include <algorithm>
#include <map>

#include "lexp/error.hpp"

namespace lexp {
namespace {

using Colors = std::vector<std::size_t>;

std::size_t compress(Colors& c) {
  Colors sorted = c;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto& x : c) x = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
  return sorted.size();
}

// Iterated colour refinement until the number of colours stops growing.
// New colours are ranks of (old colour, sorted neighbour colours), so the
// result does not depend on node numbering.
void refine(const UnlabeledGraph& g, Colors& colors) {
  const std::size_t n = g.num_nodes();
  std::size_t count = compress(colors);
  while (count < n) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (std::size_t u = 0; u < n; ++u) {
      sig[u].first = colors[u];
      for (Id w : g.neighbors(u)) sig[u].second.push_back(colors[w]);
      std::sort(sig[u].second.begin(), sig[u].second.end());
    }
    auto order = sig;
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    if (order.size() == count) break;
    for (std::size_t u = 0; u < n; ++u)
      colors[u] = static_cast<std::size_t>(std::lower_bound(order.begin(), order.end(), sig[u]) - order.begin());
    count = order.size();
  }
}

class Canonizer {
 public:
  explicit Canonizer(const UnlabeledGraph& g) : g_(g), twin_(g.num_nodes()) {
    // Nodes with equal open or equal closed neighbourhoods can be swapped by
    // an automorphism that fixes everything else.
    std::map<std::vector<Id>, Id> open, closed;
    for (std::size_t u = 0; u < g.num_nodes(); ++u) {
      auto nb = g.neighbors(u);
      auto cl = nb;
      cl.insert(std::lower_bound(cl.begin(), cl.end(), static_cast<Id>(u)), static_cast<Id>(u));
      const Id a = open.try_emplace(nb, static_cast<Id>(u)).first->second;
      const Id b = closed.try_emplace(cl, static_cast<Id>(u)).first->second;
      twin_[u] = std::min(a, b);
    }
  }

  CanonicalForm run() {
    Colors colors(g_.num_nodes(), 0);
    refine(g_, colors);
    search(colors);
    return best_;
  }

 private:
  void search(const Colors& colors) {
    const std::size_t n = g_.num_nodes();
    // Smallest colour class with more than one member.
    std::vector<std::size_t> size(n, 0);
    for (auto c : colors) ++size[c];
    std::size_t target = n;
    for (std::size_t c = 0; c < n; ++c) {
      if (size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target == n) {
      leaf(colors);
      return;
    }
    std::vector<Id> tried_twins;
    for (std::size_t u = 0; u < n; ++u) {
      if (colors[u] != target) continue;
      if (std::find(tried_twins.begin(), tried_twins.end(), twin_[u]) != tried_twins.end()) continue;
      tried_twins.push_back(twin_[u]);
      Colors next(n);
      for (std::size_t w = 0; w < n; ++w) next[w] = 2 * colors[w] + (w == u ? 0 : 1);
      refine(g_, next);
      search(next);
    }
  }

  void leaf(const Colors& colors) {
    if (++leaves_ > kMaxCanonicalLeaves)
      throw SizeError("canonical_form: more than " + std::to_string(kMaxCanonicalLeaves) +
                      " search leaves");
    std::vector<std::pair<Id, Id>> edges;
    edges.reserve(g_.num_edges());
    for (auto [a, b] : g_.edges()) {
      Id x = static_cast<Id>(colors[a]), y = static_cast<Id>(colors[b]);
      if (x > y) std::swap(x, y);
      edges.emplace_back(x, y);
    }
    std::sort(edges.begin(), edges.end());
    if (!have_best_ || edges < best_.edges) {
      have_best_ = true;
      best_.num_nodes = g_.num_nodes();
      best_.edges = std::move(edges);
      best_.labeling.assign(colors.begin(), colors.end());
    }
  }

  const UnlabeledGraph& g_;
  std::vector<Id> twin_;
  CanonicalForm best_;
  bool have_best_ = false;
  std::size_t leaves_ = 0;
};

}  // namespace

CanonicalForm canonical_form(const UnlabeledGraph& g) {
  if (g.num_nodes() == 0) return {};
  return Canonizer(g).run();
}

bool graphs_isomorphic(const UnlabeledGraph& a, const UnlabeledGraph& b) {
  if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges()) return false;
  std::vector<std::size_t> da, db;
  for (std::size_t u = 0; u < a.num_nodes(); ++u) {
    da.push_back(a.degree(u));
    db.push_back(b.degree(u));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace lexp
