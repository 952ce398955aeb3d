#include "minkin/combinat/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "minkin/error.hpp"

namespace minkin {

namespace {

constexpr int kMaxVertices = 11;

int bit_index(int a, int b, int m) {
  // Row-major index of pair (a, b), a < b, 0-based.
  return a * m - a * (a + 1) / 2 + (b - a - 1);
}

// Bitmask under relabeling: vertex v -> label[v]; the most significant bit
// belongs to pair (0,1), so integer order equals lexicographic order of the
// adjacency rows read from the top.
std::uint64_t encode(const std::vector<std::pair<int, int>>& edges, const std::vector<int>& label, int m) {
  const int total = m * (m - 1) / 2;
  std::uint64_t code = 0;
  for (auto [a, b] : edges) {
    int x = label[a], y = label[b];
    if (x > y) std::swap(x, y);
    code |= std::uint64_t{1} << (total - 1 - bit_index(x, y, m));
  }
  return code;
}

std::vector<std::pair<int, int>> zero_based(std::span<const Pair> edges, int m) {
  if (m < 1 || m > kMaxVertices) throw Error(ErrorCode::NOutOfRange, "canonical_code supports 1..11 vertices");
  std::vector<std::pair<int, int>> out;
  for (Pair e : edges) {
    if (e.i < 1 || e.j > m || e.i == e.j) throw Error(ErrorCode::BadIndex, "edge outside vertex range");
    out.emplace_back(e.i - 1, e.j - 1);
  }
  return out;
}

// Colour refinement; returns a colour per vertex where colours are ranks of
// isomorphism-invariant signatures.
std::vector<int> refine(const std::vector<std::pair<int, int>>& edges, int m) {
  std::vector<std::vector<int>> adj(m);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> colour(m, 0);
  for (;;) {
    std::vector<std::vector<int>> sig(m);
    for (int v = 0; v < m; ++v) {
      std::vector<int> nb;
      for (int w : adj[v]) nb.push_back(colour[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].push_back(colour[v]);
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> next(m);
    for (int v = 0; v < m; ++v)
      next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    int before = *std::max_element(colour.begin(), colour.end());
    int after = *std::max_element(next.begin(), next.end());
    colour = next;
    if (after == before) return colour;
  }
}

}  // namespace

std::uint64_t canonical_code(std::span<const Pair> edges, int m) {
  auto es = zero_based(edges, m);
  auto colour = refine(es, m);
  // Vertices of colour c receive labels in a contiguous block, colours in
  // increasing order; within a block every arrangement is tried.
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });
  std::vector<std::pair<int, int>> blocks;  // [start, end) in order
  for (int s = 0; s < m;) {
    int e = s;
    while (e < m && colour[order[e]] == colour[order[s]]) ++e;
    blocks.emplace_back(s, e);
    s = e;
  }
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> label(m);
  auto rec = [&](auto&& self, std::size_t bi) -> void {
    if (bi == blocks.size()) {
      for (int p = 0; p < m; ++p) label[order[p]] = p;
      best = std::min(best, encode(es, label, m));
      return;
    }
    auto [s, e] = blocks[bi];
    std::sort(order.begin() + s, order.begin() + e);
    do {
      self(self, bi + 1);
    } while (std::next_permutation(order.begin() + s, order.begin() + e));
  };
  rec(rec, 0);
  return best;
}

std::uint64_t canonical_code_bruteforce(std::span<const Pair> edges, int m) {
  auto es = zero_based(edges, m);
  std::vector<int> label(m);
  std::iota(label.begin(), label.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, encode(es, label, m));
  } while (std::next_permutation(label.begin(), label.end()));
  return best;
}

IsoClasses iso_classes(std::span<const TwoTree> trees) {
  IsoClasses out;
  if (trees.empty()) return out;
  const int n = trees.front().n();
  for (const auto& t : trees)
    if (t.n() != n) throw Error(ErrorCode::NOutOfRange, "iso_classes needs trees on one n");
  std::vector<std::uint64_t> codes(trees.size());
  const long count = static_cast<long>(trees.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (long t = 0; t < count; ++t) codes[t] = canonical_code(trees[t].edges(), n - 1);
  std::unordered_map<std::uint64_t, std::size_t> seen;
  for (std::size_t t = 0; t < trees.size(); ++t) {
    auto [it, inserted] = seen.try_emplace(codes[t], out.representatives.size());
    if (inserted) {
      out.representatives.push_back(trees[t]);
      out.class_sizes.push_back(0);
    }
    ++out.class_sizes[it->second];
  }
  return out;
}

}  // namespace minkin
