#include "minkin/moduli/potential.hpp"

#include "minkin/error.hpp"

namespace minkin {

std::vector<AffineMinor> affine_minors(int n, std::span<const Pair> support) {
  GaugeChart chart = GaugeChart::gr2(n);
  const std::size_t d = chart.dimension();
  std::vector<AffineMinor> out;
  for (Pair e : support) {
    SparsePoly p = pluecker2(chart, e.i, e.j);
    if (p.is_constant()) continue;
    AffineMinor m{e, p.coefficient(SparsePoly::Exponents(d, 0)), std::vector<BigRational>(d, 0)};
    for (std::size_t a = 0; a < d; ++a) {
      SparsePoly::Exponents ea(d, 0);
      ea[a] = 1;
      m.gradient[a] = p.coefficient(ea);
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

template <typename T>
T minor_value(const AffineMinor& m, std::span<const T> x) {
  T v = T(m.constant);
  for (std::size_t a = 0; a < x.size(); ++a)
    if (m.gradient[a] != 0) v += T(m.gradient[a]) * x[a];
  return v;
}

template <>
std::complex<double> minor_value(const AffineMinor& m, std::span<const std::complex<double>> x) {
  std::complex<double> v = m.constant.get_d();
  for (std::size_t a = 0; a < x.size(); ++a)
    if (m.gradient[a] != 0) v += m.gradient[a].get_d() * x[a];
  return v;
}

void check_dim(const MandelstamPoint& s, std::size_t xs) {
  if (xs + 3 != static_cast<std::size_t>(s.n())) throw Error(ErrorCode::DimensionMismatch, "chart point must have n-3 coordinates");
}

}  // namespace

std::vector<BigRational> potential_gradient(std::span<const Pair> support, const MandelstamPoint& s,
                                            std::span<const BigRational> x) {
  check_dim(s, x.size());
  std::vector<BigRational> g(x.size(), 0);
  for (const auto& m : affine_minors(s.n(), support)) {
    BigRational p = minor_value(m, x);
    if (p == 0) throw Error(ErrorCode::DegeneratePoint, "p" + pair_label(m.pair) + " vanishes");
    BigRational w = s(m.pair) / p;
    for (std::size_t a = 0; a < g.size(); ++a)
      if (m.gradient[a] != 0) g[a] += w * m.gradient[a];
  }
  return g;
}

std::vector<std::complex<double>> potential_gradient(std::span<const Pair> support, const MandelstamPoint& s,
                                                     std::span<const std::complex<double>> x, double floor) {
  check_dim(s, x.size());
  std::vector<std::complex<double>> g(x.size(), 0.0);
  for (const auto& m : affine_minors(s.n(), support)) {
    std::complex<double> p = minor_value(m, x);
    if (std::abs(p) < floor) throw Error(ErrorCode::DegeneratePoint, "p" + pair_label(m.pair) + " below the floor");
    std::complex<double> w = s(m.pair).get_d() / p;
    for (std::size_t a = 0; a < g.size(); ++a) g[a] += w * m.gradient[a].get_d();
  }
  return g;
}

RationalMatrix potential_hessian(std::span<const Pair> support, const MandelstamPoint& s,
                                 std::span<const BigRational> x) {
  check_dim(s, x.size());
  const std::size_t d = x.size();
  RationalMatrix h(d, d, 0);
  for (const auto& m : affine_minors(s.n(), support)) {
    BigRational p = minor_value(m, x);
    if (p == 0) throw Error(ErrorCode::DegeneratePoint, "p" + pair_label(m.pair) + " vanishes");
    BigRational w = s(m.pair) / (p * p);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        if (m.gradient[a] != 0 && m.gradient[b] != 0) h(a, b) -= w * m.gradient[a] * m.gradient[b];
  }
  return h;
}

Matrix<std::complex<double>> potential_hessian(std::span<const Pair> support, const MandelstamPoint& s,
                                               std::span<const std::complex<double>> x, double floor) {
  check_dim(s, x.size());
  const std::size_t d = x.size();
  Matrix<std::complex<double>> h(d, d, 0.0);
  for (const auto& m : affine_minors(s.n(), support)) {
    std::complex<double> p = minor_value(m, x);
    if (std::abs(p) < floor) throw Error(ErrorCode::DegeneratePoint, "p" + pair_label(m.pair) + " below the floor");
    std::complex<double> w = s(m.pair).get_d() / (p * p);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) h(a, b) -= w * BigRational(m.gradient[a] * m.gradient[b]).get_d();
  }
  return h;
}

}  // namespace minkin
