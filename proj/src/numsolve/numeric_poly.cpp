#include "minkin/numsolve/system.hpp"

#include <cmath>

#include "minkin/error.hpp"

namespace minkin {

CompiledPoly::CompiledPoly(const SparsePoly& p) : dim_(p.num_variables()) {
  for (const auto& [e, c] : p.terms()) {
    int deg = 0;
    for (int k : e) deg += k;
    if (deg > 1) affine_ = false;
    monos_.push_back({c.get_d(), e});
  }
}

std::complex<double> CompiledPoly::value(const CVec& x) const {
  std::complex<double> v = 0;
  for (const auto& m : monos_) {
    std::complex<double> t = m.c;
    for (std::size_t a = 0; a < dim_; ++a)
      for (int p = 0; p < m.e[a]; ++p) t *= x[static_cast<Eigen::Index>(a)];
    v += t;
  }
  return v;
}

void CompiledPoly::evaluate(const CVec& x, std::complex<double>& v, CVec& grad, CMat* hess) const {
  const auto d = static_cast<Eigen::Index>(dim_);
  v = 0;
  grad.setZero(d);
  if (hess) hess->setZero(d, d);
  // x^k with k-1 and k-2 variants computed on the fly; degrees here are tiny.
  auto pw = [](std::complex<double> b, int k) {
    std::complex<double> r = 1;
    for (int i = 0; i < k; ++i) r *= b;
    return r;
  };
  for (const auto& m : monos_) {
    std::complex<double> full = m.c;
    for (Eigen::Index a = 0; a < d; ++a) full *= pw(x[a], m.e[static_cast<std::size_t>(a)]);
    v += full;
    for (Eigen::Index a = 0; a < d; ++a) {
      int ea = m.e[static_cast<std::size_t>(a)];
      if (ea == 0) continue;
      std::complex<double> da = m.c * static_cast<double>(ea);
      for (Eigen::Index b = 0; b < d; ++b) da *= pw(x[b], m.e[static_cast<std::size_t>(b)] - (b == a ? 1 : 0));
      grad[a] += da;
      if (!hess) continue;
      for (Eigen::Index b = 0; b < d; ++b) {
        int eb = m.e[static_cast<std::size_t>(b)] - (b == a ? 1 : 0);
        if (eb == 0) continue;
        std::complex<double> dab = m.c * static_cast<double>(ea) * static_cast<double>(eb);
        for (Eigen::Index c = 0; c < d; ++c)
          dab *= pw(x[c], m.e[static_cast<std::size_t>(c)] - (c == a ? 1 : 0) - (c == b ? 1 : 0));
        (*hess)(a, b) += dab;
      }
    }
  }
}

LogPotential::LogPotential(std::vector<SparsePoly> factors, std::vector<std::string> labels)
    : exact_(std::move(factors)), labels_(std::move(labels)) {
  if (exact_.empty()) throw Error(ErrorCode::DimensionMismatch, "potential without terms");
  if (labels_.size() != exact_.size()) throw Error(ErrorCode::DimensionMismatch, "one label per factor");
  dim_ = exact_.front().num_variables();
  for (const auto& f : exact_) {
    if (!f.same_variables(exact_.front())) throw Error(ErrorCode::MixedVariables, "factors over different charts");
    factors_.emplace_back(f);
  }
}

bool LogPotential::term_matrix(const CVec& x, CMat& a, double floor) const {
  const auto d = static_cast<Eigen::Index>(dim_);
  a.resize(d, static_cast<Eigen::Index>(factors_.size()));
  std::complex<double> v;
  CVec grad(d);
  for (std::size_t e = 0; e < factors_.size(); ++e) {
    factors_[e].evaluate(x, v, grad, nullptr);
    if (!std::isfinite(std::abs(v)) || std::abs(v) < floor) return false;
    a.col(static_cast<Eigen::Index>(e)) = grad / v;
  }
  return a.allFinite();
}

bool LogPotential::gradient(const CVec& x, const CVec& w, CVec& g, double floor) const {
  CMat a;
  if (!term_matrix(x, a, floor)) return false;
  g = a * w;
  return g.allFinite();
}

bool LogPotential::gradient_jacobian(const CVec& x, const CVec& w, CVec& g, CMat& j, double floor) const {
  const auto d = static_cast<Eigen::Index>(dim_);
  g.setZero(d);
  j.setZero(d, d);
  std::complex<double> v;
  CVec grad(d);
  CMat hess(d, d);
  for (std::size_t e = 0; e < factors_.size(); ++e) {
    std::complex<double> we = w[static_cast<Eigen::Index>(e)];
    if (we == 0.0) continue;
    bool quadratic = !factors_[e].is_affine();
    factors_[e].evaluate(x, v, grad, quadratic ? &hess : nullptr);
    if (!std::isfinite(std::abs(v)) || std::abs(v) < floor) return false;
    CVec q = grad / v;
    g += we * q;
    j -= we * (q * q.transpose());
    if (quadratic) j += (we / v) * hess;
  }
  return g.allFinite() && j.allFinite();
}

double LogPotential::min_factor_abs(const CVec& x) const {
  double m = INFINITY;
  for (const auto& f : factors_) m = std::min(m, std::abs(f.value(x)));
  return m;
}

}  // namespace minkin
