#include "minkin/horn/horn.hpp"

#include <algorithm>

#include "minkin/error.hpp"
#include "minkin/moduli/potential.hpp"

namespace minkin {

namespace {

std::size_t column_of(const std::vector<Pair>& cols, Pair e) {
  auto it = std::find(cols.begin(), cols.end(), e);
  if (it == cols.end()) throw Error(ErrorCode::EdgeNotInTree, "edge " + pair_label(e) + " is not a column");
  return static_cast<std::size_t>(it - cols.begin());
}

std::string triangle_label(const Triangle& tri) {
  bool dotted = tri.k >= 10;
  auto sep = dotted ? std::string(".") : std::string();
  return std::to_string(tri.i) + sep + std::to_string(tri.j) + sep + std::to_string(tri.k);
}

}  // namespace

HornPair horn_matrix(const TwoTree& t) {
  HornPair hp;
  hp.columns = t.support();
  const auto tris = t.triangles();
  const std::size_t rows = 3 * tris.size(), cols = hp.columns.size();
  hp.H = Matrix<int>(rows, cols, 0);
  hp.lambda.assign(cols, 0);
  hp.horn_lambda.assign(cols, 0);
  for (std::size_t b = 0; b < tris.size(); ++b) {
    const Triangle& tri = tris[b];
    std::size_t ci = column_of(hp.columns, tri.child_i()), cj = column_of(hp.columns, tri.child_j());
    if (tri.parent() != Pair{1, 2}) {
      std::size_t cp = column_of(hp.columns, tri.parent());
      for (std::size_t r = 0; r < 3 * b; ++r) {
        hp.H(r, ci) = hp.H(r, cp);
        hp.H(r, cj) = hp.H(r, cp);
      }
      hp.lambda[ci] = hp.lambda[cp];
      hp.lambda[cj] = -hp.lambda[cp];
      hp.horn_lambda[ci] = -hp.horn_lambda[cp];
      hp.horn_lambda[cj] = hp.horn_lambda[cp];
    } else {
      hp.lambda[ci] = 1;
      hp.lambda[cj] = -1;
      hp.horn_lambda[ci] = -1;
      hp.horn_lambda[cj] = 1;
    }
    hp.H(3 * b, ci) = 1;
    hp.H(3 * b + 1, cj) = 1;
    hp.H(3 * b + 2, ci) = -1;
    hp.H(3 * b + 2, cj) = -1;
    std::string tl = triangle_label(tri);
    hp.row_labels.push_back(tl + ":" + pair_label(tri.child_i()));
    hp.row_labels.push_back(tl + ":" + pair_label(tri.child_j()));
    hp.row_labels.push_back(tl + ":sum");
  }
  return hp;
}

LinearForm bracket(const TriangleStats& st, Pair edge) {
  auto it = st.dec.find(edge);
  if (it == st.dec.end() || edge == Pair{1, 2})
    throw Error(ErrorCode::EdgeNotInTree, "no bracket for edge " + pair_label(edge));
  LinearForm f;
  for (Pair d : it->second) f.add(d, 1);
  return f;
}

LinearForm bracket(const TwoTree& t, Pair edge) { return bracket(tree_stats(t), edge); }

std::vector<LinearForm> horn_row_forms(const HornPair& hp) {
  std::vector<LinearForm> out(hp.H.rows());
  for (std::size_t r = 0; r < hp.H.rows(); ++r)
    for (std::size_t c = 0; c < hp.H.cols(); ++c) out[r].add(hp.columns[c], hp.H(r, c));
  return out;
}

SymbolicCriticalPoint critical_point_symbolic(const TwoTree& t) {
  const TriangleStats st = tree_stats(t);
  const HornPair hp = horn_matrix(t);
  SymbolicCriticalPoint cp;
  // Product form over ancestral triangles.
  for (std::size_t c = 0; c < hp.columns.size(); ++c) {
    Pair e = hp.columns[c];
    FactoredRational v(BigRational(hp.lambda[c]));
    for (const auto& entry : st.anc.at(e)) {
      const Triangle& tri = st.triangles[entry.triangle];
      LinearForm sum = bracket(st, tri.child_i()) + bracket(st, tri.child_j());
      v *= FactoredRational(bracket(st, entry.path_child));
      v /= FactoredRational(sum);
    }
    cp.p_hat[e] = v;
  }
  // Monomial form read off the Horn matrix.
  auto rows = horn_row_forms(hp);
  for (std::size_t c = 0; c < hp.columns.size(); ++c) {
    std::vector<FactoredRational::Factor> f;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (hp.H(r, c) != 0) f.emplace_back(rows[r], hp.H(r, c));
    cp.p_hat_horn[hp.columns[c]] = FactoredRational(BigRational(hp.horn_lambda[c]), f);
  }
  // Forward substitution: y_1 = 0, y_2 = 1, y_k = p_ik + y_i.
  std::map<int, FactoredSum> y;
  y[1] = FactoredSum();
  y[2] = FactoredSum(FactoredRational(1));
  for (const Step& s : t.steps()) {
    FactoredSum yk = y[s.i];
    yk.add(cp.p_hat.at({s.i, s.k}));
    y[s.k] = yk;
  }
  for (int k = 3; k <= t.n() - 1; ++k) cp.x_hat.push_back(y[k]);
  return cp;
}

namespace {

void require_nondegenerate(const TriangleStats& st, const MandelstamPoint& s) {
  for (const auto& tri : st.triangles) {
    BigRational bi = bracket(st, tri.child_i()).evaluate(s.values());
    BigRational bj = bracket(st, tri.child_j()).evaluate(s.values());
    if (bi == 0 || bj == 0 || bi + bj == 0)
      throw Error(ErrorCode::DegenerateS, "bracket or bracket sum vanishes at triangle " + std::to_string(tri.i) + "," +
                                               std::to_string(tri.j) + "," + std::to_string(tri.k));
  }
}

}  // namespace

CriticalPoint critical_point(const TwoTree& t, const MandelstamPoint& s) {
  if (s.n() != t.n()) throw Error(ErrorCode::DimensionMismatch, "s and T have different n");
  require_nondegenerate(tree_stats(t), s);
  SymbolicCriticalPoint sym = critical_point_symbolic(t);
  CriticalPoint cp;
  cp.p_hat_symbolic = sym.p_hat;
  auto values = s.values();
  for (const auto& [e, f] : sym.p_hat) cp.p_hat[e] = f.evaluate(values);
  for (const auto& x : sym.x_hat) cp.x_hat.push_back(x.evaluate(values));
  return cp;
}

HornReport verify_horn(const TwoTree& t, const MandelstamPoint& s) {
  HornReport rep;
  const HornPair hp = horn_matrix(t);
  rep.column_sums_zero = true;
  for (std::size_t c = 0; c < hp.H.cols(); ++c) {
    int sum = 0;
    for (std::size_t r = 0; r < hp.H.rows(); ++r) sum += hp.H(r, c);
    if (sum != 0) rep.column_sums_zero = false;
  }
  rep.block_sums_zero = true;
  for (std::size_t b = 0; 3 * b < hp.H.rows(); ++b)
    for (std::size_t c = 0; c < hp.H.cols(); ++c)
      if (hp.H(3 * b, c) + hp.H(3 * b + 1, c) + hp.H(3 * b + 2, c) != 0) rep.block_sums_zero = false;
  try {
    CriticalPoint cp = critical_point(t, s);
    auto p = cp.p_hat;
    p[{1, 2}] = 1;
    rep.trinomials = true;
    for (const auto& tri : t.triangles())
      if (p.at(tri.child_i()) - p.at(tri.child_j()) != p.at(tri.parent())) rep.trinomials = false;
    auto g = potential_gradient(t.edges(), s, cp.x_hat);
    rep.gradient_zero = std::all_of(g.begin(), g.end(), [](const BigRational& v) { return v == 0; });
    SymbolicCriticalPoint sym = critical_point_symbolic(t);
    rep.forms_agree = true;
    for (const auto& [e, f] : sym.p_hat_horn) {
      if (!(f == sym.p_hat.at(e)) || f.evaluate(s.values()) != cp.p_hat.at(e)) rep.forms_agree = false;
    }
  } catch (const Error& e) {
    rep.degenerate = true;
    rep.detail = e.what();
    return rep;
  }
  if (!rep.ok()) rep.detail = "check failed";
  return rep;
}

nlohmann::json to_json(const HornPair& hp) {
  nlohmann::json cols = nlohmann::json::array(), rows = nlohmann::json::array();
  for (Pair c : hp.columns) cols.push_back(pair_label(c));
  for (std::size_t r = 0; r < hp.H.rows(); ++r) {
    std::vector<int> row;
    for (std::size_t c = 0; c < hp.H.cols(); ++c) row.push_back(hp.H(r, c));
    rows.push_back(row);
  }
  return {{"columns", cols}, {"rows", hp.row_labels}, {"H", rows}, {"lambda", hp.lambda}, {"horn_lambda", hp.horn_lambda}};
}

}  // namespace minkin
