#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "minkin/combinat/two_tree.hpp"
#include "minkin/pair.hpp"

namespace minkin {

// Canonical code of a simple graph on vertices 1..m (m <= 11): the minimum,
// over all relabelings that respect a colour-refinement partition, of the
// adjacency bitmask. Two graphs are isomorphic iff their codes agree.
std::uint64_t canonical_code(std::span<const Pair> edges, int m);

// Reference version: minimum over all m! relabelings (tests only, m <= 8).
std::uint64_t canonical_code_bruteforce(std::span<const Pair> edges, int m);

struct IsoClasses {
  std::vector<TwoTree> representatives;  // first member of each class, input order
  std::vector<std::size_t> class_sizes;
};

// Canonical codes are computed in parallel; grouping is serial and stable.
IsoClasses iso_classes(std::span<const TwoTree> trees);

}  // namespace minkin
