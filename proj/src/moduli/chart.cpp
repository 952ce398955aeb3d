#include "minkin/moduli/chart.hpp"

#include "minkin/error.hpp"

namespace minkin {

GaugeChart GaugeChart::gr2(int n) {
  if (n < 4) throw Error(ErrorCode::NOutOfRange, "GR2 chart needs n >= 4");
  GaugeChart c;
  c.n_ = n;
  c.kind_ = ChartKind::Gr2;
  c.vars_ = chart_variable_names(static_cast<std::size_t>(n - 3));
  c.matrix_ = PolyMatrix(2, static_cast<std::size_t>(n), c.zero());
  c.matrix_(0, 0) = c.one();
  c.matrix_(0, 1) = c.one();
  c.matrix_(1, 1) = c.one();
  for (int col = 3; col <= n - 1; ++col) {
    c.matrix_(0, static_cast<std::size_t>(col - 1)) = c.one();
    c.matrix_(1, static_cast<std::size_t>(col - 1)) = SparsePoly::variable(c.vars_, static_cast<std::size_t>(col - 3));
  }
  c.matrix_(1, static_cast<std::size_t>(n - 1)) = c.one();
  return c;
}

GaugeChart GaugeChart::gr36() {
  GaugeChart c;
  c.n_ = 6;
  c.kind_ = ChartKind::Gr36;
  c.vars_ = chart_variable_names(4);
  c.matrix_ = PolyMatrix(3, 6, c.zero());
  for (std::size_t r = 0; r < 3; ++r) {
    c.matrix_(r, r) = c.one();
    c.matrix_(r, 3) = c.one();
  }
  c.matrix_(0, 4) = c.one();
  c.matrix_(1, 4) = SparsePoly::variable(c.vars_, 0);
  c.matrix_(2, 4) = SparsePoly::variable(c.vars_, 1);
  c.matrix_(0, 5) = c.one();
  c.matrix_(1, 5) = SparsePoly::variable(c.vars_, 2);
  c.matrix_(2, 5) = SparsePoly::variable(c.vars_, 3);
  return c;
}

SparsePoly pluecker2(const GaugeChart& chart, int i, int j) {
  if (chart.kind() != ChartKind::Gr2) throw Error(ErrorCode::BadIndex, "pluecker2 needs a GR2 chart");
  if (i < 1 || i >= j || j > chart.n()) throw Error(ErrorCode::BadIndex, "pluecker2 needs 1 <= i < j <= n");
  const auto& m = chart.gauge_matrix();
  auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(j - 1);
  return m(0, a) * m(1, b) - m(1, a) * m(0, b);
}

SparsePoly pluecker3(const GaugeChart& chart, int i, int j, int k) {
  if (chart.kind() != ChartKind::Gr36) throw Error(ErrorCode::BadIndex, "pluecker3 needs a GR36 chart");
  if (i < 1 || i >= j || j >= k || k > 6) throw Error(ErrorCode::BadIndex, "pluecker3 needs 1 <= i < j < k <= 6");
  const auto& m = chart.gauge_matrix();
  PolyMatrix sub(3, 3);
  std::size_t cols[3] = {static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1)};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) sub(r, c) = m(r, cols[c]);
  return det_polynomial_matrix(sub);
}

}  // namespace minkin
