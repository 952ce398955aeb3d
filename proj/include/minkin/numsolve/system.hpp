#pragma once

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <vector>

#include "minkin/exact/sparse_poly.hpp"

namespace minkin {

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// Polynomial compiled to double coefficients for fast complex evaluation of
// value, gradient and Hessian.
class CompiledPoly {
 public:
  CompiledPoly() = default;
  explicit CompiledPoly(const SparsePoly& p);

  std::complex<double> value(const CVec& x) const;
  // value, gradient (size d) and Hessian (d x d) in one pass.
  void evaluate(const CVec& x, std::complex<double>& v, CVec& grad, CMat* hess) const;
  bool is_affine() const { return affine_; }

 private:
  struct Mono {
    double c;
    std::vector<int> e;
  };
  std::size_t dim_ = 0;
  bool affine_ = true;
  std::vector<Mono> monos_;
};

// Logarithmic potential L(x; w) = Σ_e w_e log f_e(x). Gradient is linear in
// the weights: g(x; w) = A(x) w with columns A_e = ∇f_e / f_e.
class LogPotential {
 public:
  LogPotential(std::vector<SparsePoly> factors, std::vector<std::string> labels);

  std::size_t dim() const { return dim_; }
  std::size_t terms() const { return factors_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<SparsePoly>& factors() const { return exact_; }

  // false when some |f_e(x)| < floor or a value is not finite.
  bool term_matrix(const CVec& x, CMat& a, double floor) const;
  bool gradient(const CVec& x, const CVec& w, CVec& g, double floor) const;
  bool gradient_jacobian(const CVec& x, const CVec& w, CVec& g, CMat& j, double floor) const;
  double min_factor_abs(const CVec& x) const;

 private:
  std::size_t dim_ = 0;
  std::vector<SparsePoly> exact_;
  std::vector<CompiledPoly> factors_;
  std::vector<std::string> labels_;
};

}  // namespace minkin
