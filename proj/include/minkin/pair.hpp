#pragma once

#include <compare>
#include <string>

namespace minkin {

// Unordered index pair {i, j}, stored with i < j. Doubles as graph edge and
// as the label of the Mandelstam variable s_ij.
struct Pair {
  int i = 0;
  int j = 0;
  auto operator<=>(const Pair&) const = default;
};

inline Pair make_pair_sorted(int a, int b) { return a < b ? Pair{a, b} : Pair{b, a}; }

// "13" when both labels are single digits, otherwise "1.13".
std::string pair_label(Pair p);
Pair parse_pair_label(const std::string& text);

}  // namespace minkin
