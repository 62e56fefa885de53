#include "lexp/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "lexp/error.hpp"
#include "lexp/random.hpp"

namespace lexp {

std::size_t DegreeVector::total() const {
  return std::accumulate(values.begin(), values.end(), std::size_t{0});
}

Hypergraph::Hypergraph(std::size_t num_vertices, std::vector<std::vector<Id>> hyperedges)
    : edge_vertices_(std::move(hyperedges)), vertex_edges_(num_vertices) {
  for (std::size_t e = 0; e < edge_vertices_.size(); ++e) {
    auto& pins = edge_vertices_[e];
    std::sort(pins.begin(), pins.end());
    for (std::size_t i = 0; i < pins.size(); ++i) {
      if (pins[i] >= num_vertices)
        throw ArgumentError("hyperedge " + std::to_string(e) + " references vertex " +
                            std::to_string(pins[i]) + " >= " + std::to_string(num_vertices));
      if (i > 0 && pins[i] == pins[i - 1])
        throw ArgumentError("hyperedge " + std::to_string(e) + " repeats vertex " +
                            std::to_string(pins[i]));
      vertex_edges_[pins[i]].push_back(static_cast<Id>(e));
    }
    num_pairs_ += pins.size();
  }
}

Hypergraph Hypergraph::from_pairs(std::size_t num_vertices, std::size_t num_hyperedges,
                                  const std::vector<std::pair<Id, Id>>& pairs) {
  std::vector<std::vector<Id>> edges(num_hyperedges);
  for (auto [v, e] : pairs) {
    if (e >= num_hyperedges)
      throw ArgumentError("pair references hyperedge " + std::to_string(e) + " >= " +
                          std::to_string(num_hyperedges));
    edges[e].push_back(v);
  }
  return Hypergraph(num_vertices, std::move(edges));
}

bool Hypergraph::contains(std::size_t v, std::size_t e) const {
  const auto& edges = vertex_edges_[v];
  return std::binary_search(edges.begin(), edges.end(), static_cast<Id>(e));
}

std::vector<std::pair<Id, Id>> Hypergraph::pairs() const {
  std::vector<std::pair<Id, Id>> out;
  out.reserve(num_pairs_);
  for (std::size_t v = 0; v < vertex_edges_.size(); ++v)
    for (Id e : vertex_edges_[v]) out.emplace_back(static_cast<Id>(v), e);
  return out;
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool parse_count(std::string_view token, std::size_t& out) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto next_line = [&](std::string_view& line) -> bool {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string_view::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };

  std::string_view line;
  if (!next_line(line)) throw ParseError(line_no, "missing header \"<num_vertices> <num_hyperedges>\"");
  const auto header = split_ws(line);
  std::size_t nv = 0, ne = 0;
  if (header.size() != 2 || !parse_count(header[0], nv) || !parse_count(header[1], ne))
    throw ParseError(line_no, "malformed header, expected \"<num_vertices> <num_hyperedges>\"");

  std::vector<std::vector<Id>> edges;
  edges.reserve(ne);
  while (next_line(line)) {
    if (edges.size() == ne)
      throw ParseError(line_no, "more hyperedge lines than the " + std::to_string(ne) + " declared");
    const auto tokens = split_ws(line);
    std::vector<Id> pins;
    if (!(tokens.size() == 1 && tokens[0] == "-")) {
      pins.reserve(tokens.size());
      for (auto tok : tokens) {
        std::size_t v = 0;
        if (!parse_count(tok, v))
          throw ParseError(line_no, "invalid vertex id \"" + std::string(tok) + "\"");
        if (v >= nv)
          throw ParseError(line_no, "vertex id " + std::to_string(v) + " out of range [0, " +
                                        std::to_string(nv) + ")");
        pins.push_back(static_cast<Id>(v));
      }
      auto sorted = pins;
      std::sort(sorted.begin(), sorted.end());
      const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      if (dup != sorted.end())
        throw ParseError(line_no, "duplicate vertex " + std::to_string(*dup) + " in hyperedge " +
                                      std::to_string(edges.size()));
    }
    edges.push_back(std::move(pins));
  }
  if (edges.size() != ne)
    throw ParseError(line_no, "expected " + std::to_string(ne) + " hyperedge lines, found " +
                                  std::to_string(edges.size()));
  return Hypergraph(nv, std::move(edges));
}

Hypergraph read_hypergraph(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_hypergraph(ss.str());
}

Hypergraph load_hypergraph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return read_hypergraph(in);
}

std::string render_hypergraph(const Hypergraph& h) {
  std::string out = std::to_string(h.num_vertices()) + ' ' + std::to_string(h.num_hyperedges()) + '\n';
  for (const auto& pins : h.hyperedges()) {
    if (pins.empty()) {
      out += "-\n";
      continue;
    }
    for (std::size_t i = 0; i < pins.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(pins[i]);
    }
    out += '\n';
  }
  return out;
}

DegreeVector vertex_degrees(const Hypergraph& h) {
  DegreeVector d{DegreeKind::vertex, std::vector<std::size_t>(h.num_vertices())};
  for (std::size_t v = 0; v < h.num_vertices(); ++v) d.values[v] = h.vertex_degree(v);
  return d;
}

DegreeVector hyperedge_degrees(const Hypergraph& h) {
  DegreeVector d{DegreeKind::hyperedge, std::vector<std::size_t>(h.num_hyperedges())};
  for (std::size_t e = 0; e < h.num_hyperedges(); ++e) d.values[e] = h.hyperedge_degree(e);
  return d;
}

SparseMatrix incidence_matrix(const Hypergraph& h) {
  std::vector<Triplet> t;
  t.reserve(h.num_pairs());
  for (auto [v, e] : h.pairs()) t.push_back({v, e, 1.0});
  return SparseMatrix::from_triplets(h.num_vertices(), h.num_hyperedges(), std::move(t));
}

std::string ValidationReport::summary() const {
  std::ostringstream ss;
  ss << (ok ? "ok" : "invalid");
  auto list = [&](const char* name, const std::vector<Id>& ids) {
    if (ids.empty()) return;
    ss << "; " << name << ':';
    for (Id id : ids) ss << ' ' << id;
  };
  list("empty hyperedges", empty_hyperedges);
  list("isolated vertices", isolated_vertices);
  if (!duplicate_hyperedges.empty()) {
    ss << "; duplicate hyperedges:";
    for (auto [a, b] : duplicate_hyperedges) ss << ' ' << a << '=' << b;
  }
  return ss.str();
}

ValidationReport validate(const Hypergraph& h) {
  ValidationReport r;
  for (std::size_t e = 0; e < h.num_hyperedges(); ++e)
    if (h.hyperedge_degree(e) == 0) r.empty_hyperedges.push_back(static_cast<Id>(e));
  for (std::size_t v = 0; v < h.num_vertices(); ++v)
    if (h.vertex_degree(v) == 0) r.isolated_vertices.push_back(static_cast<Id>(v));
  std::map<std::vector<Id>, Id> seen;
  for (std::size_t e = 0; e < h.num_hyperedges(); ++e) {
    if (h.pins(e).empty()) continue;
    auto [it, inserted] = seen.emplace(h.pins(e), static_cast<Id>(e));
    if (!inserted) r.duplicate_hyperedges.emplace_back(it->second, static_cast<Id>(e));
  }
  r.ok = r.empty_hyperedges.empty();
  return r;
}

Hypergraph random_hypergraph(std::size_t num_vertices, std::size_t num_hyperedges, double p,
                             std::uint64_t seed) {
  if (num_vertices == 0) throw ArgumentError("random_hypergraph: num_vertices must be positive");
  if (!(p > 0.0 && p <= 1.0)) throw ArgumentError("random_hypergraph: p must lie in (0, 1]");
  constexpr int kMaxRedraws = 64;
  Rng rng(seed);
  std::vector<std::vector<Id>> edges(num_hyperedges);
  for (auto& pins : edges) {
    for (int attempt = 0; attempt <= kMaxRedraws && pins.empty(); ++attempt) {
      for (std::size_t v = 0; v < num_vertices; ++v)
        if (rng.bernoulli(p)) pins.push_back(static_cast<Id>(v));
    }
    if (pins.empty()) pins.push_back(static_cast<Id>(rng.below(num_vertices)));
  }
  return Hypergraph(num_vertices, std::move(edges));
}

Hypergraph compact(const Hypergraph& h) {
  std::vector<Id> vmap(h.num_vertices(), 0);
  std::size_t nv = 0;
  for (std::size_t v = 0; v < h.num_vertices(); ++v)
    if (h.vertex_degree(v) > 0) vmap[v] = static_cast<Id>(nv++);
  std::vector<std::vector<Id>> edges;
  for (const auto& pins : h.hyperedges()) {
    if (pins.empty()) continue;
    std::vector<Id> mapped;
    for (Id v : pins) mapped.push_back(vmap[v]);
    edges.push_back(std::move(mapped));
  }
  return Hypergraph(nv, std::move(edges));
}

std::vector<Component> connected_components(const Hypergraph& h) {
  const std::size_t nv = h.num_vertices();
  std::vector<char> vseen(nv, 0), eseen(h.num_hyperedges(), 0);
  std::vector<Component> out;
  for (std::size_t start = 0; start < nv; ++start) {
    if (vseen[start]) continue;
    Component c;
    std::vector<Id> stack{static_cast<Id>(start)};
    vseen[start] = 1;
    while (!stack.empty()) {
      const Id v = stack.back();
      stack.pop_back();
      c.vertices.push_back(v);
      for (Id e : h.incident_edges(v)) {
        if (eseen[e]) continue;
        eseen[e] = 1;
        c.hyperedges.push_back(e);
        for (Id u : h.pins(e)) {
          if (!vseen[u]) {
            vseen[u] = 1;
            stack.push_back(u);
          }
        }
      }
    }
    std::sort(c.vertices.begin(), c.vertices.end());
    std::sort(c.hyperedges.begin(), c.hyperedges.end());
    out.push_back(std::move(c));
  }
  for (std::size_t e = 0; e < h.num_hyperedges(); ++e)
    if (!eseen[e]) out.push_back(Component{{}, {static_cast<Id>(e)}});
  return out;
}

Hypergraph dual(const Hypergraph& h) {
  std::vector<std::vector<Id>> edges(h.num_vertices());
  for (std::size_t v = 0; v < h.num_vertices(); ++v) edges[v] = h.incident_edges(v);
  return Hypergraph(h.num_hyperedges(), std::move(edges));
}

}  // namespace lexp

namespace lexp {

Hypergraph restrict_to(const Hypergraph& h, const Component& c) {
  std::vector<Id> vertex_pos(h.num_vertices(), static_cast<Id>(-1));
  for (std::size_t i = 0; i < c.vertices.size(); ++i) vertex_pos[c.vertices[i]] = static_cast<Id>(i);
  std::vector<std::vector<Id>> edges;
  edges.reserve(c.hyperedges.size());
  for (Id e : c.hyperedges) {
    std::vector<Id> pins;
    for (Id v : h.pins(e)) {
      if (vertex_pos[v] == static_cast<Id>(-1))
        throw ArgumentError("restrict_to: hyperedge " + std::to_string(e) +
                            " leaves the component");
      pins.push_back(vertex_pos[v]);
    }
    edges.push_back(std::move(pins));
  }
  return Hypergraph(c.vertices.size(), std::move(edges));
}

}  // namespace lexp
