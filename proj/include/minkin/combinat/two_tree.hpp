#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minkin/pair.hpp"

namespace minkin {

// Vertex k glued onto the existing edge {i, j}, i < j.
struct Step {
  int k = 0;
  int i = 0;
  int j = 0;
  bool operator==(const Step&) const = default;
};

// Triangle {i, j, k} of a 2-tree: parent edge {i, j} with i < j, and the two
// edges created with it, child_i = {i, k} and child_j = {j, k}.
struct Triangle {
  int i = 0;
  int j = 0;
  int k = 0;
  Pair parent() const { return {i, j}; }
  Pair child_i() const { return make_pair_sorted(i, k); }
  Pair child_j() const { return make_pair_sorted(j, k); }
};

// 2-tree on the vertex set [n-1], kept as its construction sequence.
class TwoTree {
 public:
  // REFERENCED_EDGE_MISSING, BAD_ORDER, N_OUT_OF_RANGE.
  static TwoTree build(std::span<const Step> steps, int n);

  int n() const { return n_; }
  const std::vector<Step>& steps() const { return steps_; }
  // 2n-5 edges in creation order, starting with {1,2}.
  const std::vector<Pair>& edges() const { return edges_; }
  // Edges other than {1,2}, in creation order (the Horn matrix columns).
  std::vector<Pair> support() const { return {edges_.begin() + 1, edges_.end()}; }
  bool has_edge(Pair e) const;
  std::vector<Triangle> triangles() const;

  // "123,134,145": one triple per step, written (i, j, k).
  std::string to_string() const;

  bool operator==(const TwoTree& o) const { return n_ == o.n_ && steps_ == o.steps_; }

 private:
  int n_ = 0;
  std::vector<Step> steps_;
  std::vector<Pair> edges_;
};

inline TwoTree build_two_tree(std::span<const Step> steps, int n) { return TwoTree::build(steps, n); }

// All labeled construction sequences, (2n-7)!! of them; 4 <= n <= 12.
std::vector<TwoTree> enumerate_two_trees(int n);

struct RecognizeResult {
  std::optional<TwoTree> tree;  // empty means NOT_A_2TREE
  std::string reason;
};

// Inverse of the construction: strips degree-2 vertices whose neighbors are
// adjacent. Only labelings in which vertex k attaches to smaller labels
// are representable as a TwoTree, so others also report NOT_A_2TREE.
RecognizeResult recognize_two_tree(std::span<const Pair> edges, int n);

struct AncestralEntry {
  std::size_t triangle = 0;  // index into TriangleStats::triangles
  Pair path_child;           // the child of that triangle on the path down
};

struct TriangleStats {
  std::vector<Triangle> triangles;
  std::map<Pair, int> v;
  std::map<Pair, std::vector<Pair>> dec;  // reflexive, creation order
  std::map<Pair, int> a;
  std::map<int, int> b;
  // Triangles on the path from {1,2} down to the edge, root first.
  std::map<Pair, std::vector<AncestralEntry>> anc;
};

TriangleStats tree_stats(const TwoTree& t);

}  // namespace minkin
