#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "minkin/combinat/two_tree.hpp"
#include "minkin/exact/factored.hpp"
#include "minkin/exact/matrix.hpp"
#include "minkin/kinematics/mandelstam.hpp"

namespace minkin {

struct HornPair {
  std::vector<Pair> columns;     // T minus {1,2}, creation order
  std::vector<std::string> row_labels;  // "123:13", "123:23", "123:sum", ...
  Matrix<int> H;                 // (3n-9) x (2n-6)
  // Sign rule of the product form: lambda_13 = +1, lambda_23 = -1,
  // lambda_ik = lambda_ij, lambda_jk = -lambda_ij.
  std::vector<int> lambda;
  // Signs for the literal monomial map p = horn_lambda * (Hs)^H. Each
  // ancestral triangle contributes (Hs)_sum^-1 = -1/([s_ik]+[s_jk]), so
  // horn_lambda_e = lambda_e * (-1)^(number of ancestral triangles of e).
  std::vector<int> horn_lambda;
};

HornPair horn_matrix(const TwoTree& t);

// [s_e] = Σ_{lm in dec(e)} s_lm; EDGE_NOT_IN_TREE for {1,2} or foreign edges.
LinearForm bracket(const TwoTree& t, Pair edge);
LinearForm bracket(const TriangleStats& st, Pair edge);

// The entries of H s as linear forms in the s-variables of the columns.
std::vector<LinearForm> horn_row_forms(const HornPair& hp);

struct SymbolicCriticalPoint {
  std::map<Pair, FactoredRational> p_hat;       // product form over ancestral triangles
  std::map<Pair, FactoredRational> p_hat_horn;  // monomial form horn_lambda * (Hs)^H
  std::vector<FactoredSum> x_hat;               // chart coordinates x1..x_{n-3}
};

SymbolicCriticalPoint critical_point_symbolic(const TwoTree& t);

struct CriticalPoint {
  std::map<Pair, FactoredRational> p_hat_symbolic;
  std::map<Pair, BigRational> p_hat;
  std::vector<BigRational> x_hat;
};

// DEGENERATE_S when a bracket or a bracket sum vanishes at s.
CriticalPoint critical_point(const TwoTree& t, const MandelstamPoint& s);

struct HornReport {
  bool degenerate = false;
  bool column_sums_zero = false;
  bool block_sums_zero = false;
  bool trinomials = false;
  bool gradient_zero = false;
  bool forms_agree = false;
  std::string detail;
  bool ok() const {
    return !degenerate && column_sums_zero && block_sums_zero && trinomials && gradient_zero && forms_agree;
  }
};

// Never throws on degenerate s; reports instead.
HornReport verify_horn(const TwoTree& t, const MandelstamPoint& s);

nlohmann::json to_json(const HornPair& hp);

}  // namespace minkin
