#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "lexp/gcn.hpp"

namespace lexp {

// UCI Zoo: "name,a1,...,a16,type" per line. One hyperedge per (attribute,
// value) pair that occurs, holding every animal with that value; features are
// the 16 raw attribute values; labels are type - 1. The first 66 animals of a
// seeded permutation train, the remaining ones test.
ToyProblem read_zoo(std::istream& in, std::uint64_t split_seed = 0);

// Looks at $LEXP_ZOO_PATH, then data/zoo.data under `root`. Empty when
// neither file exists.
std::optional<std::string> find_zoo_file(const std::string& root);

}  // namespace lexp
