#include "minkin/combinat/two_tree.hpp"

#include <algorithm>
#include <set>

#include "minkin/error.hpp"

namespace minkin {

namespace {

constexpr int kMaxEnumerateN = 12;

std::string vertex_list(std::initializer_list<int> v) {
  bool dotted = std::any_of(v.begin(), v.end(), [](int x) { return x >= 10; });
  std::string s;
  for (int x : v) {
    if (dotted && !s.empty()) s += ".";
    s += std::to_string(x);
  }
  return s;
}

}  // namespace

TwoTree TwoTree::build(std::span<const Step> steps, int n) {
  if (n < 4) throw Error(ErrorCode::NOutOfRange, "2-trees need n >= 4");
  if (steps.size() != static_cast<std::size_t>(n - 3))
    throw Error(ErrorCode::BadOrder, "expected " + std::to_string(n - 3) + " steps");
  TwoTree t;
  t.n_ = n;
  t.edges_.push_back({1, 2});
  std::set<Pair> present{{1, 2}};
  int expected_k = 3;
  for (const Step& s : steps) {
    if (s.k != expected_k) throw Error(ErrorCode::BadOrder, "step for vertex " + std::to_string(s.k) + " out of order");
    if (s.i >= s.j || !present.count({s.i, s.j}))
      throw Error(ErrorCode::ReferencedEdgeMissing,
                  "vertex " + std::to_string(s.k) + " attached to missing edge " + pair_label(make_pair_sorted(s.i, s.j)));
    t.steps_.push_back(s);
    Pair a{s.i, s.k}, b{s.j, s.k};
    t.edges_.push_back(a);
    t.edges_.push_back(b);
    present.insert(a);
    present.insert(b);
    ++expected_k;
  }
  return t;
}

bool TwoTree::has_edge(Pair e) const { return std::find(edges_.begin(), edges_.end(), e) != edges_.end(); }

std::vector<Triangle> TwoTree::triangles() const {
  std::vector<Triangle> out;
  for (const Step& s : steps_) out.push_back({s.i, s.j, s.k});
  return out;
}

std::string TwoTree::to_string() const {
  std::string s;
  for (const Step& st : steps_) {
    if (!s.empty()) s += ",";
    s += vertex_list({st.i, st.j, st.k});
  }
  return s;
}

std::vector<TwoTree> enumerate_two_trees(int n) {
  if (n < 4 || n > kMaxEnumerateN) throw Error(ErrorCode::NOutOfRange, "enumerate_two_trees needs 4 <= n <= 12");
  std::vector<TwoTree> out;
  std::vector<Step> steps;
  std::vector<Pair> edges{{1, 2}};
  // Depth-first over the edge chosen at each step; edges are listed in
  // creation order, which fixes the output order.
  auto rec = [&](auto&& self, int k) -> void {
    if (k == n) {
      out.push_back(TwoTree::build(steps, n));
      return;
    }
    const std::size_t existing = edges.size();
    for (std::size_t e = 0; e < existing; ++e) {
      Pair p = edges[e];
      steps.push_back({k, p.i, p.j});
      edges.push_back({p.i, k});
      edges.push_back({p.j, k});
      self(self, k + 1);
      edges.resize(existing);
      steps.pop_back();
    }
  };
  rec(rec, 3);
  return out;
}

RecognizeResult recognize_two_tree(std::span<const Pair> edges, int n) {
  if (n < 4) return {std::nullopt, "n must be at least 4"};
  std::set<Pair> es;
  for (Pair e : edges) {
    Pair p = make_pair_sorted(e.i, e.j);
    if (p.i < 1 || p.j > n - 1 || p.i == p.j) return {std::nullopt, "edge " + pair_label(p) + " outside [n-1]"};
    es.insert(p);
  }
  if (es.size() != static_cast<std::size_t>(2 * n - 5))
    return {std::nullopt, "edge count " + std::to_string(es.size()) + " != 2n-5 = " + std::to_string(2 * n - 5)};
  if (!es.count({1, 2})) return {std::nullopt, "edge 12 missing"};
  std::vector<Step> rev;
  std::set<Pair> cur = es;
  for (int k = n - 1; k >= 3; --k) {
    std::vector<int> nb;
    for (Pair e : cur)
      if (e.i == k || e.j == k) nb.push_back(e.i == k ? e.j : e.i);
    if (nb.size() != 2) return {std::nullopt, "vertex " + std::to_string(k) + " has degree " + std::to_string(nb.size()) + " when stripped"};
    Pair base = make_pair_sorted(nb[0], nb[1]);
    if (base.j > k || !cur.count(base))
      return {std::nullopt, "neighbors of vertex " + std::to_string(k) + " are not an earlier edge"};
    rev.push_back({k, base.i, base.j});
    cur.erase(make_pair_sorted(nb[0], k));
    cur.erase(make_pair_sorted(nb[1], k));
  }
  std::reverse(rev.begin(), rev.end());
  return {TwoTree::build(rev, n), ""};
}

TriangleStats tree_stats(const TwoTree& t) {
  TriangleStats st;
  st.triangles = t.triangles();
  std::map<Pair, std::vector<Pair>> children;
  std::map<Pair, std::size_t> made_by;  // edge -> triangle that created it
  for (Pair e : t.edges()) st.v[e] = 0;
  for (std::size_t idx = 0; idx < st.triangles.size(); ++idx) {
    const Triangle& tri = st.triangles[idx];
    for (Pair e : {tri.parent(), tri.child_i(), tri.child_j()}) ++st.v[e];
    children[tri.parent()].push_back(tri.child_i());
    children[tri.parent()].push_back(tri.child_j());
    made_by[tri.child_i()] = idx;
    made_by[tri.child_j()] = idx;
  }
  // Descendants in creation order: children are always created later, so a
  // reverse sweep sees every child's closure before its parent's.
  const auto& edges = t.edges();
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
    std::vector<Pair> d{*it};
    for (Pair c : children[*it]) d.insert(d.end(), st.dec[c].begin(), st.dec[c].end());
    std::sort(d.begin(), d.end(), [&](Pair x, Pair y) {
      return std::find(edges.begin(), edges.end(), x) < std::find(edges.begin(), edges.end(), y);
    });
    st.dec[*it] = d;
    st.a[*it] = static_cast<int>(d.size());
  }
  for (const Triangle& tri : st.triangles) st.b[tri.k] = st.a[tri.child_i()] + st.a[tri.child_j()] + 1;
  st.anc[{1, 2}] = {};
  for (std::size_t e = 1; e < edges.size(); ++e) {
    std::size_t idx = made_by[edges[e]];
    auto path = st.anc[st.triangles[idx].parent()];
    path.push_back({idx, edges[e]});
    st.anc[edges[e]] = path;
  }
  return st;
}

}  // namespace minkin
