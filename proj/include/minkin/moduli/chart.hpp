#pragma once

#include <string>
#include <vector>

#include "minkin/exact/linalg.hpp"
#include "minkin/exact/sparse_poly.hpp"

namespace minkin {

enum class ChartKind { Gr2, Gr36 };

// Gauge-fixed representative of a configuration.
//   GR2:  2 x n matrix with columns (1,0),(1,1),(1,x1),...,(1,x_{n-3}),(0,1).
//   GR36: 3 x 6 matrix with columns e1,e2,e3,(1,1,1),(1,x1,x2),(1,x3,x4).
class GaugeChart {
 public:
  static GaugeChart gr2(int n);
  static GaugeChart gr36();

  int n() const { return n_; }
  ChartKind kind() const { return kind_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t dimension() const { return vars_.size(); }
  const PolyMatrix& gauge_matrix() const { return matrix_; }

  SparsePoly zero() const { return SparsePoly::constant(vars_, 0); }
  SparsePoly one() const { return SparsePoly::constant(vars_, 1); }

 private:
  int n_ = 0;
  ChartKind kind_ = ChartKind::Gr2;
  std::vector<std::string> vars_;
  PolyMatrix matrix_;
};

// 2x2 minor p_ij, 1 <= i < j <= n (BAD_INDEX otherwise, or on a GR36 chart).
SparsePoly pluecker2(const GaugeChart& chart, int i, int j);
// 3x3 minor p_ijk, 1 <= i < j < k <= 6 on the GR36 chart.
SparsePoly pluecker3(const GaugeChart& chart, int i, int j, int k);

}  // namespace minkin
