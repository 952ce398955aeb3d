#include "minkin/combinat/hypertree.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "minkin/error.hpp"

namespace minkin {

Triple make_triple(int a, int b, int c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) throw Error(ErrorCode::BadIndex, "triple with repeated vertex");
  return t;
}

Hypertree::Hypertree(int n, std::vector<Triple> triples) : n_(n) {
  if (triples.size() + 2 != static_cast<std::size_t>(n))
    throw Error(ErrorCode::WrongTripleCount, "expected n-2 = " + std::to_string(n - 2) + " triples");
  for (auto& t : triples) {
    t = make_triple(t[0], t[1], t[2]);
    if (t[0] < 1 || t[2] > n) throw Error(ErrorCode::BadIndex, "triple outside [n]");
  }
  triples_ = std::move(triples);
}

std::vector<Pair> Hypertree::edges() const {
  std::set<Pair> es;
  for (const auto& t : triples_) {
    es.insert({t[0], t[1]});
    es.insert({t[0], t[2]});
    es.insert({t[1], t[2]});
  }
  return {es.begin(), es.end()};
}

std::vector<Pair> Hypertree::non_edges() const {
  auto es = edges();
  std::vector<Pair> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (!std::binary_search(es.begin(), es.end(), Pair{i, j})) out.push_back({i, j});
  return out;
}

HypertreeReport validate_hypertree(std::span<const Triple> triples, int n) {
  if (triples.size() + 2 != static_cast<std::size_t>(n) || n < 3)
    throw Error(ErrorCode::WrongTripleCount, "expected n-2 = " + std::to_string(n - 2) + " triples");
  if (n > 32) throw Error(ErrorCode::NOutOfRange, "subset scan limited to n <= 32");
  std::vector<std::uint32_t> masks;
  for (const auto& t : triples) {
    std::uint32_t m = 0;
    for (int v : t) {
      if (v < 1 || v > n) throw Error(ErrorCode::BadIndex, "triple outside [n]");
      m |= 1u << (v - 1);
    }
    if (std::popcount(m) != 3) throw Error(ErrorCode::BadIndex, "triple with repeated vertex");
    masks.push_back(m);
  }
  HypertreeReport rep;
  for (int v = 1; v <= n; ++v) {
    int c = 0;
    for (auto m : masks) c += (m >> (v - 1)) & 1u;
    if (c < 2) {
      rep.failing_axiom = "a";
      rep.witness = std::vector<int>{v};
      return rep;
    }
  }
  const std::size_t k = masks.size();
  bool strict = true;
  std::optional<std::vector<int>> strict_witness;
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << k); ++sub) {
    std::uint32_t uni = 0;
    int size = std::popcount(sub);
    for (std::size_t t = 0; t < k; ++t)
      if (sub >> t & 1u) uni |= masks[t];
    int covered = std::popcount(uni);
    auto members = [&] {
      std::vector<int> w;
      for (std::size_t t = 0; t < k; ++t)
        if (sub >> t & 1u) w.push_back(static_cast<int>(t) + 1);
      return w;
    };
    if (covered < size + 2) {
      rep.failing_axiom = "b";
      rep.witness = members();
      return rep;
    }
    if (strict && size >= 2 && size <= n - 3 && covered == size + 2) {
      strict = false;
      strict_witness = members();
    }
  }
  rep.is_hypertree = true;
  rep.is_irreducible = strict;
  if (!strict) {
    rep.failing_axiom = "strict";
    rep.witness = strict_witness;
  }
  return rep;
}

}  // namespace minkin
