#include "minkin/amplitude/two_tree_amplitude.hpp"

#include "minkin/error.hpp"
#include "minkin/horn/horn.hpp"
#include "minkin/moduli/potential.hpp"

namespace minkin {

namespace {

struct TriangleForms {
  LinearForm bi, bj;
  int ai = 0, aj = 0, b = 0;
};

std::vector<TriangleForms> triangle_forms(const TwoTree& t) {
  TriangleStats st = tree_stats(t);
  std::vector<TriangleForms> out;
  for (const Triangle& tri : st.triangles)
    out.push_back({bracket(st, tri.child_i()), bracket(st, tri.child_j()), st.a.at(tri.child_i()),
                   st.a.at(tri.child_j()), st.b.at(tri.k)});
  return out;
}

}  // namespace

FactoredRational amplitude_formula(const TwoTree& t) {
  FactoredRational r;
  for (const auto& f : triangle_forms(t))
    r *= FactoredRational(1, {{f.bi + f.bj, 1}, {f.bi, -1}, {f.bj, -1}});
  return r;
}

FactoredRational hessian_closed_form(const TwoTree& t) {
  FactoredRational r((t.n() - 3) % 2 == 0 ? 1 : -1);
  for (const auto& f : triangle_forms(t))
    r *= FactoredRational(1, {{f.bi + f.bj, f.b}, {f.bi, -f.ai}, {f.bj, -f.aj}});
  return r;
}

FactoredRational integrand_squared_closed_form(const TwoTree& t) {
  FactoredRational r;
  for (const auto& f : triangle_forms(t))
    r *= FactoredRational(1, {{f.bi + f.bj, f.b + 1}, {f.bi, -(f.ai + 1)}, {f.bj, -(f.aj + 1)}});
  return r;
}

AmplitudeEvaluator::AmplitudeEvaluator(const TwoTree& t) : tree_(t), integrand_(integrand(matrix_MT(t))) {}

AmplitudeEvaluator::Value AmplitudeEvaluator::evaluate(const MandelstamPoint& s) const {
  CriticalPoint cp = critical_point(tree_, s);
  Value v;
  v.x_hat = cp.x_hat;
  v.integrand = integrand_.evaluate(cp.x_hat);
  RationalMatrix h = potential_hessian(tree_.edges(), s, cp.x_hat);
  v.hessian_det = det_rational(h);
  if (v.hessian_det == 0) throw Error(ErrorCode::DegenerateS, "singular Hessian at the critical point");
  // det(-H) = (-1)^d det(H) with d = n-3.
  BigRational neg_det = (tree_.n() - 3) % 2 == 0 ? v.hessian_det : BigRational(-v.hessian_det);
  v.amplitude = v.integrand * v.integrand / neg_det;
  return v;
}

BigRational amplitude_at(const TwoTree& t, const MandelstamPoint& s) { return AmplitudeEvaluator(t).evaluate(s).amplitude; }

std::vector<LinearForm> genericity_forms(const TwoTree& t) {
  std::vector<LinearForm> out;
  for (const auto& f : triangle_forms(t)) {
    out.push_back(f.bi);
    out.push_back(f.bj);
    out.push_back(f.bi + f.bj);
  }
  return out;
}

}  // namespace minkin

namespace minkin {

MandelstamPoint random_tree_point(const TwoTree& t, std::uint64_t seed) {
  KinematicConstraints c{t.n(), false, {}, {}};
  for (Pair p : all_pairs(t.n()))
    if (p == Pair{1, 2} || !t.has_edge(p)) c.zero_pairs.push_back(p);
  std::vector<LinearForm> forms = genericity_forms(t);
  for (Pair e : t.support()) forms.push_back(LinearForm::variable(e));
  return sample_subspace(c, seed, forms);
}

}  // namespace minkin
