#include "lexp/reconstruction.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

#include "lexp/error.hpp"

namespace lexp {

Hypergraph back_project_labeled(const LineExpansion& le) {
  return Hypergraph::from_pairs(le.num_vertices(), le.num_hyperedges(), le.nodes());
}

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

// Exact search for a Krausz partition of one connected graph (<= 64 nodes)
// whose clique incidence graph is bipartite.
class KrauszSearch {
 public:
  explicit KrauszSearch(const UnlabeledGraph& g) : n_(g.num_nodes()), uncovered_(n_, 0), count_(n_, 0) {
    for (auto [a, b] : g.edges()) {
      uncovered_[a] |= bit(b);
      uncovered_[b] |= bit(a);
    }
  }

  bool run() { return search(); }

  bool found_partition() const { return found_partition_; }

  // Valid after run() returned true.
  const std::vector<Mask>& cliques() const { return result_cliques_; }
  const std::vector<int>& sides() const { return result_sides_; }

 private:
  static constexpr std::uint64_t kStepBudget = 50'000'000;

  bool search() {
    if (++steps_ > kStepBudget)
      throw SizeError("krausz_reconstruct: search budget exhausted");
    std::size_t u = n_;
    for (std::size_t i = 0; i < n_; ++i) {
      if (uncovered_[i]) {
        u = i;
        break;
      }
    }
    if (u == n_) return finish();
    if (count_[u] == 2) return false;

    const Mask nbrs = uncovered_[u];
    if (count_[u] == 1) {
      if (!is_clique(nbrs)) return false;
      return try_cliques(u, nbrs, 0);
    }

    // u gets at most two cliques; split its uncovered neighbourhood into a
    // part A (holding the lowest neighbour) and a part B, both cliques.
    const std::size_t w = static_cast<std::size_t>(std::countr_zero(nbrs));
    std::vector<std::size_t> rest;
    for (Mask m = nbrs & ~bit(w); m; m &= m - 1) rest.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return split(u, rest, 0, bit(w), 0);
  }

  bool split(std::size_t u, const std::vector<std::size_t>& rest, std::size_t k, Mask a, Mask b) {
    if (k == rest.size()) return try_cliques(u, a, b);
    const std::size_t x = rest[k];
    if ((uncovered_[x] & a) == a && split(u, rest, k + 1, a | bit(x), b)) return true;
    if ((uncovered_[x] & b) == b && split(u, rest, k + 1, a, b | bit(x))) return true;
    return false;
  }

  bool is_clique(Mask members) const {
    for (Mask m = members; m; m &= m - 1) {
      const std::size_t x = static_cast<std::size_t>(std::countr_zero(m));
      const Mask others = members & ~bit(x);
      if ((uncovered_[x] & others) != others) return false;
    }
    return true;
  }

  bool can_join(Mask members) const {
    for (Mask m = members; m; m &= m - 1)
      if (count_[static_cast<std::size_t>(std::countr_zero(m))] >= 2) return false;
    return true;
  }

  void apply(Mask members, int delta) {
    for (Mask m = members; m; m &= m - 1) {
      const std::size_t x = static_cast<std::size_t>(std::countr_zero(m));
      const Mask others = members & ~bit(x);
      if (delta > 0)
        uncovered_[x] &= ~others;
      else
        uncovered_[x] |= others;
      count_[x] += delta;
    }
  }

  // Adds clique {u} + a and, when b is nonempty, {u} + b, then recurses.
  bool try_cliques(std::size_t u, Mask a, Mask b) {
    const Mask ca = a | bit(u);
    const Mask cb = b ? (b | bit(u)) : 0;
    if (!can_join(a) || (b && !can_join(b))) return false;
    apply(ca, +1);
    cliques_.push_back(ca);
    if (cb) {
      apply(cb, +1);
      cliques_.push_back(cb);
    }
    const bool ok = search();
    if (cb) {
      cliques_.pop_back();
      apply(cb, -1);
    }
    cliques_.pop_back();
    apply(ca, -1);
    return ok;
  }

  // Every edge is covered; pad to two cliques per node and 2-colour.
  bool finish() {
    found_partition_ = true;
    std::vector<Mask> all = cliques_;
    for (std::size_t x = 0; x < n_; ++x)
      for (int c = count_[x]; c < 2; ++c) all.push_back(bit(x));

    std::vector<std::vector<std::size_t>> member_of(n_);
    for (std::size_t c = 0; c < all.size(); ++c)
      for (Mask m = all[c]; m; m &= m - 1) member_of[static_cast<std::size_t>(std::countr_zero(m))].push_back(c);

    std::vector<int> side(all.size(), -1);
    for (std::size_t start = 0; start < all.size(); ++start) {
      if (side[start] != -1) continue;
      side[start] = 0;
      std::vector<std::size_t> stack{start};
      while (!stack.empty()) {
        const std::size_t c = stack.back();
        stack.pop_back();
        for (Mask m = all[c]; m; m &= m - 1) {
          const auto& pair = member_of[static_cast<std::size_t>(std::countr_zero(m))];
          const std::size_t other = pair[0] == c ? pair[1] : pair[0];
          if (other == c) return false;
          if (side[other] == -1) {
            side[other] = 1 - side[c];
            stack.push_back(other);
          } else if (side[other] == side[c]) {
            return false;
          }
        }
      }
    }
    result_cliques_ = std::move(all);
    result_sides_ = std::move(side);
    return true;
  }

  std::size_t n_;
  std::vector<Mask> uncovered_;
  std::vector<int> count_;
  std::vector<Mask> cliques_;
  std::vector<Mask> result_cliques_;
  std::vector<int> result_sides_;
  std::uint64_t steps_ = 0;
  bool found_partition_ = false;
};

struct ComponentResult {
  std::vector<std::vector<Id>> cliques;  // local node ids
  std::vector<int> sides;
};

ComponentResult reconstruct_component(const UnlabeledGraph& g) {
  KrauszSearch search(g);
  if (!search.run()) {
    if (!search.found_partition())
      throw NotLineExpansionError("graph admits no partition of its edges into cliques covering "
                                  "every node exactly twice");
    throw InconsistentInputError("every clique partition has a non-bipartite clique incidence");
  }
  ComponentResult r;
  for (Mask m : search.cliques()) {
    std::vector<Id> members;
    for (; m; m &= m - 1) members.push_back(static_cast<Id>(std::countr_zero(m)));
    r.cliques.push_back(std::move(members));
  }
  r.sides = search.sides();
  return r;
}

std::vector<std::vector<Id>> sorted_pin_lists(const Hypergraph& h) {
  auto lists = h.hyperedges();
  std::sort(lists.begin(), lists.end());
  return lists;
}

}  // namespace

bool canonical_less(const Hypergraph& a, const Hypergraph& b) {
  if (a.num_vertices() != b.num_vertices()) return a.num_vertices() < b.num_vertices();
  if (a.num_hyperedges() != b.num_hyperedges()) return a.num_hyperedges() < b.num_hyperedges();
  return sorted_pin_lists(a) < sorted_pin_lists(b);
}

Reconstruction krausz_reconstruct(const UnlabeledGraph& g) {
  if (g.num_nodes() > kMaxKrauszNodes)
    throw SizeError("krausz_reconstruct: " + std::to_string(g.num_nodes()) +
                    " nodes exceeds the limit of " + std::to_string(kMaxKrauszNodes));
  if (g.num_nodes() == 0) throw InvalidInputError("krausz_reconstruct: empty graph");

  Reconstruction out;
  out.labels.assign(g.num_nodes(), {0, 0});
  out.cover.assignment.assign(g.num_nodes(), {0, 0});
  std::vector<std::size_t> filled(g.num_nodes(), 0);
  Id next_vertex = 0, next_hyperedge = 0;
  std::vector<std::pair<Id, Id>> pairs;

  for (const auto& nodes : g.components()) {
    const auto local = reconstruct_component(g.induced(nodes));
    std::vector<Id> role_id(local.cliques.size());
    for (std::size_t c = 0; c < local.cliques.size(); ++c)
      role_id[c] = local.sides[c] == 0 ? next_vertex++ : next_hyperedge++;
    for (std::size_t c = 0; c < local.cliques.size(); ++c) {
      const auto clique_id = static_cast<Id>(out.cover.cliques.size());
      std::vector<Id> members;
      for (Id x : local.cliques[c]) {
        const Id node = nodes[x];
        members.push_back(node);
        out.cover.assignment[node][filled[node]++] = clique_id;
        if (local.sides[c] == 0)
          out.labels[node].first = role_id[c];
        else
          out.labels[node].second = role_id[c];
      }
      out.cover.cliques.push_back(std::move(members));
    }
  }
  for (const auto& l : out.labels) pairs.push_back(l);

  Hypergraph primary = Hypergraph::from_pairs(next_vertex, next_hyperedge, pairs);
  Hypergraph swapped = dual(primary);
  if (canonical_less(swapped, primary)) {
    std::swap(primary, swapped);
    for (auto& l : out.labels) std::swap(l.first, l.second);
  }
  out.candidates = {std::move(primary), std::move(swapped)};
  return out;
}

namespace {

// Isomorphism search mapping hyperedges of a onto hyperedges of b, with at
// most kMaxIsomorphismSide hyperedges. Vertices are matched implicitly by
// comparing multisets of incidence signatures restricted to the mapped
// hyperedges.
class HyperedgeMatcher {
 public:
  HyperedgeMatcher(const Hypergraph& a, const Hypergraph& b) : a_(a), b_(b) {
    sig_a_ = signatures(a);
    sig_b_ = signatures(b);
    order_.resize(a.num_hyperedges());
    std::iota(order_.begin(), order_.end(), Id{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Id x, Id y) {
      return a.hyperedge_degree(x) > a.hyperedge_degree(y);
    });
    image_.assign(a.num_hyperedges(), 0);
    used_.assign(b.num_hyperedges(), 0);
  }

  bool run() { return extend(0); }

 private:
  static std::vector<std::uint32_t> signatures(const Hypergraph& h) {
    std::vector<std::uint32_t> s(h.num_vertices(), 0);
    for (auto [v, e] : h.pairs()) s[v] |= std::uint32_t{1} << e;
    return s;
  }

  bool consistent(std::size_t depth) const {
    std::uint32_t image_mask = 0;
    for (std::size_t k = 0; k < depth; ++k) image_mask |= std::uint32_t{1} << image_[order_[k]];
    std::vector<std::uint32_t> ka, kb;
    ka.reserve(sig_a_.size());
    kb.reserve(sig_b_.size());
    for (auto s : sig_a_) {
      std::uint32_t mapped = 0;
      for (std::size_t k = 0; k < depth; ++k)
        if (s & (std::uint32_t{1} << order_[k])) mapped |= std::uint32_t{1} << image_[order_[k]];
      ka.push_back(mapped);
    }
    for (auto s : sig_b_) kb.push_back(s & image_mask);
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Id ea = order_[depth];
    for (std::size_t eb = 0; eb < b_.num_hyperedges(); ++eb) {
      if (used_[eb] || b_.hyperedge_degree(eb) != a_.hyperedge_degree(ea)) continue;
      used_[eb] = 1;
      image_[ea] = static_cast<Id>(eb);
      if (consistent(depth + 1) && extend(depth + 1)) return true;
      used_[eb] = 0;
    }
    return false;
  }

  const Hypergraph& a_;
  const Hypergraph& b_;
  std::vector<std::uint32_t> sig_a_, sig_b_;
  std::vector<Id> order_;
  std::vector<Id> image_;
  std::vector<char> used_;
};

std::vector<std::size_t> sorted_values(DegreeVector d) {
  std::sort(d.values.begin(), d.values.end());
  return d.values;
}

}  // namespace

bool hypergraph_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  for (const Hypergraph* h : {&a, &b}) {
    if (std::min(h->num_vertices(), h->num_hyperedges()) > kMaxIsomorphismSide)
      throw SizeError("hypergraph_isomorphic: min(|V|, |E|) = " +
                      std::to_string(std::min(h->num_vertices(), h->num_hyperedges())) +
                      " exceeds " + std::to_string(kMaxIsomorphismSide));
  }
  if (a.num_vertices() != b.num_vertices() || a.num_hyperedges() != b.num_hyperedges() ||
      a.num_pairs() != b.num_pairs())
    return false;
  if (sorted_values(vertex_degrees(a)) != sorted_values(vertex_degrees(b)) ||
      sorted_values(hyperedge_degrees(a)) != sorted_values(hyperedge_degrees(b)))
    return false;
  if (a.num_hyperedges() > kMaxIsomorphismSide) {
    const Hypergraph da = dual(a), db = dual(b);
    return HyperedgeMatcher(da, db).run();
  }
  return HyperedgeMatcher(a, b).run();
}

}  // namespace lexp
