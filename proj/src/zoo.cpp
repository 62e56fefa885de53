#include "lexp/zoo.hpp"

#include <cstdlib>
#include <filesystem>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

#include "lexp/error.hpp"
#include "lexp/random.hpp"

namespace lexp {

namespace {
constexpr std::size_t kAttributes = 16;
constexpr std::size_t kTrainSize = 66;
}  // namespace

ToyProblem read_zoo(std::istream& in, std::uint64_t split_seed) {
  std::vector<std::vector<int>> attrs;
  std::vector<std::optional<std::size_t>> labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != kAttributes + 2)
      throw ParseError(line_no, "expected " + std::to_string(kAttributes + 2) + " fields");
    std::vector<int> row;
    for (std::size_t a = 1; a <= kAttributes + 1; ++a) {
      try {
        row.push_back(std::stoi(cells[a]));
      } catch (const std::exception&) {
        throw ParseError(line_no, "field " + std::to_string(a) + " is not an integer");
      }
    }
    if (row.back() < 1) throw ParseError(line_no, "animal type must be >= 1");
    labels.push_back(static_cast<std::size_t>(row.back() - 1));
    row.pop_back();
    attrs.push_back(std::move(row));
  }
  const std::size_t n = attrs.size();
  if (n <= kTrainSize) throw InvalidInputError("zoo file has only " + std::to_string(n) + " rows");

  std::vector<std::vector<Id>> edges;
  for (std::size_t a = 0; a < kAttributes; ++a) {
    std::map<int, std::size_t> slot;  // value -> hyperedge, first appearance order
    for (std::size_t v = 0; v < n; ++v) {
      auto [it, fresh] = slot.try_emplace(attrs[v][a], edges.size());
      if (fresh) edges.emplace_back();
      edges[it->second].push_back(static_cast<Id>(v));
    }
  }

  Matrix x(n, kAttributes);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t a = 0; a < kAttributes; ++a) x(v, a) = attrs[v][a];

  std::vector<Id> order(n);
  std::iota(order.begin(), order.end(), Id{0});
  Rng rng(split_seed);
  for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
  Split split;
  split.train.assign(order.begin(), order.begin() + kTrainSize);
  split.test.assign(order.begin() + kTrainSize, order.end());

  ToyProblem out{Hypergraph(n, std::move(edges)), {}};
  out.data = assemble_dataset(std::move(x), std::move(labels), split);
  return out;
}

std::optional<std::string> find_zoo_file(const std::string& root) {
  namespace fs = std::filesystem;
  if (const char* env = std::getenv("LEXP_ZOO_PATH"); env && *env && fs::exists(env))
    return std::string(env);
  const auto local = fs::path(root) / "data" / "zoo.data";
  if (fs::exists(local)) return local.string();
  return std::nullopt;
}

}  // namespace lexp
