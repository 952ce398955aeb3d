#pragma once

#include "minkin/amplitude/onshell.hpp"
#include "minkin/combinat/two_tree.hpp"
#include "minkin/exact/factored.hpp"
#include "minkin/kinematics/mandelstam.hpp"

namespace minkin {

// Amplitudes are I²/det(-∇²L) summed over critical points, for 2-trees and
// hypertrees alike; reported in outputs under this name.
inline constexpr const char* kAmplitudeConvention = "negated_hessian";

// Π_triangles ([s_ik] + [s_jk]) / ([s_ik] [s_jk]).
FactoredRational amplitude_formula(const TwoTree& t);

// det ∇²L_T at x̂ = (-1)^(n-3) Π ([s_ik]+[s_jk])^{b_k} / ([s_ik]^{a_ik} [s_jk]^{a_jk}).
FactoredRational hessian_closed_form(const TwoTree& t);

// I_T(x̂)² = Π ([s_ik]+[s_jk])^{b_k+1} / ([s_ik]^{a_ik+1} [s_jk]^{a_jk+1}).
FactoredRational integrand_squared_closed_form(const TwoTree& t);

// Exact evaluation from the critical point: Horn x̂, chart integrand built
// from M_T, and the exact Hessian. The integrand is built once per tree.
class AmplitudeEvaluator {
 public:
  explicit AmplitudeEvaluator(const TwoTree& t);

  struct Value {
    BigRational amplitude;       // I² / det(-∇²L)
    BigRational hessian_det;     // det ∇²L at x̂
    BigRational integrand;       // I_T(x̂)
    std::vector<BigRational> x_hat;
  };
  // DEGENERATE_S when s is not generic enough for the formulas.
  Value evaluate(const MandelstamPoint& s) const;

  const TwoTree& tree() const { return tree_; }
  const ChartRational& chart_integrand() const { return integrand_; }

 private:
  TwoTree tree_;
  ChartRational integrand_;
};

BigRational amplitude_at(const TwoTree& t, const MandelstamPoint& s);

// Nonvanishing forms for generic sampling: every bracket and bracket sum.
std::vector<LinearForm> genericity_forms(const TwoTree& t);

}  // namespace minkin

namespace minkin {

// Random integer s on the edges of T (free, non-conserving), generic for the
// bracket formulas; zero on all other pairs.
MandelstamPoint random_tree_point(const TwoTree& t, std::uint64_t seed);

}  // namespace minkin
