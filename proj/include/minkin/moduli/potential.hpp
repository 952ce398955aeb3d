#pragma once

#include <complex>
#include <span>
#include <vector>

#include "minkin/exact/linalg.hpp"
#include "minkin/kinematics/mandelstam.hpp"
#include "minkin/moduli/chart.hpp"

namespace minkin {

// Scattering potential L = Σ_{e in support} s_e log p_e on the GR2 chart of
// s.n(). Pairs whose minor is constant ({1,2} and {i,n}) are dropped.
//
// gradient_a = Σ s_e c_{e,a} / p_e,  hessian_ab = -Σ s_e c_{e,a} c_{e,b} / p_e^2,
// where c_e is the (constant) gradient of the affine minor p_e.

struct AffineMinor {
  Pair pair;
  BigRational constant;
  std::vector<BigRational> gradient;
};

// Non-constant minors of the support, in support order.
std::vector<AffineMinor> affine_minors(int n, std::span<const Pair> support);

constexpr double kDefaultDegeneracyFloor = 1e-12;

std::vector<BigRational> potential_gradient(std::span<const Pair> support, const MandelstamPoint& s,
                                            std::span<const BigRational> x);
std::vector<std::complex<double>> potential_gradient(std::span<const Pair> support, const MandelstamPoint& s,
                                                     std::span<const std::complex<double>> x,
                                                     double floor = kDefaultDegeneracyFloor);
RationalMatrix potential_hessian(std::span<const Pair> support, const MandelstamPoint& s,
                                 std::span<const BigRational> x);
Matrix<std::complex<double>> potential_hessian(std::span<const Pair> support, const MandelstamPoint& s,
                                               std::span<const std::complex<double>> x,
                                               double floor = kDefaultDegeneracyFloor);

}  // namespace minkin
