#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minkin/pair.hpp"

namespace minkin {

using Triple = std::array<int, 3>;  // sorted ascending

Triple make_triple(int a, int b, int c);

class Hypertree {
 public:
  Hypertree() = default;
  // Stores the triples (sorted) without checking the axioms; see
  // validate_hypertree. WRONG_TRIPLE_COUNT unless there are n-2 triples.
  Hypertree(int n, std::vector<Triple> triples);

  int n() const { return n_; }
  const std::vector<Triple>& triples() const { return triples_; }
  std::vector<Pair> edges() const;      // sorted pairs covered by a triple
  std::vector<Pair> non_edges() const;  // remaining pairs of [n]

 private:
  int n_ = 0;
  std::vector<Triple> triples_;
};

struct HypertreeReport {
  bool is_hypertree = false;
  bool is_irreducible = false;
  std::string failing_axiom;                 // "a", "b", "strict" or empty
  std::optional<std::vector<int>> witness;   // vertex for (a); 1-based triple indices for (b)
};

HypertreeReport validate_hypertree(std::span<const Triple> triples, int n);

}  // namespace minkin
