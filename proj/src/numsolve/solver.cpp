#include "minkin/numsolve/solver.hpp"

#include <algorithm>
#include <cmath>

#include "minkin/error.hpp"

namespace minkin {

namespace {

double sup(const CVec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

CVec gaussian(std::mt19937_64& rng, Eigen::Index n, double scale = 1.0) {
  std::normal_distribution<double> g(0.0, scale);
  CVec v(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    double re = g(rng), im = g(rng);
    v[k] = {re, im};
  }
  return v;
}

class SolutionSet {
 public:
  explicit SolutionSet(double tol) : tol_(tol) {}
  bool insert(const CVec& x) {
    for (const auto& y : pts_)
      if (sup(x - y) <= tol_ * (1.0 + std::max(sup(x), sup(y)))) return false;
    pts_.push_back(x);
    return true;
  }
  const std::vector<CVec>& points() const { return pts_; }

 private:
  double tol_;
  std::vector<CVec> pts_;
};

std::vector<TrackResult> run(const LogPotential& p, const std::vector<CVec>& starts, const std::vector<Leg>& legs,
                             const NumSolveConfig& cfg) {
  return cfg.parallel ? track_batch_parallel(p, starts, legs, cfg.tracker)
                      : track_batch_serial(p, starts, legs, cfg.tracker);
}

// A point x0 and weights w in the family with g(x0; w) = 0: solve
// A(x0) B θ = 0 for θ.
bool seed_pair(const LogPotential& p, const ParameterFamily& f, std::mt19937_64& rng, CVec& x0, CVec& w) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    x0 = gaussian(rng, static_cast<Eigen::Index>(p.dim()));
    CMat a;
    if (!p.term_matrix(x0, a, 1e-6)) continue;
    CMat ab = a * f.basis.cast<std::complex<double>>();
    Eigen::FullPivLU<CMat> lu(ab);
    lu.setThreshold(1e-10);
    CMat ker = lu.kernel();
    if (ker.cols() == 0 || (ker.cols() == 1 && ker.norm() == 0)) return false;
    CVec theta = ker * gaussian(rng, ker.cols());
    w = f.basis.cast<std::complex<double>>() * theta;
    if (w.norm() == 0) continue;
    w /= sup(w);
    CVec g;
    if (p.gradient(x0, w, g, 1e-12) && sup(g) < 1e-8 * (1 + sup(x0))) return true;
  }
  return false;
}

CVec random_weights(const ParameterFamily& f, std::mt19937_64& rng) {
  CVec w = f.basis.cast<std::complex<double>>() * gaussian(rng, f.basis.cols());
  return w / sup(w);
}

}  // namespace

bool point_less(const CVec& a, const CVec& b) {
  for (Eigen::Index k = 0; k < std::min(a.size(), b.size()); ++k) {
    if (a[k].real() != b[k].real()) return a[k].real() < b[k].real();
    if (a[k].imag() != b[k].imag()) return a[k].imag() < b[k].imag();
  }
  return a.size() < b.size();
}

CriticalPointSet solve_in_family(const LogPotential& p, const ParameterFamily& family, const CVec& target,
                                 const NumSolveConfig& cfg) {
  if (static_cast<std::size_t>(family.basis.rows()) != p.terms() || static_cast<std::size_t>(target.size()) != p.terms())
    throw Error(ErrorCode::DimensionMismatch, "family and target must match the potential's terms");
  std::mt19937_64 rng(cfg.seed);
  SolutionSet base(cfg.tol_dedupe);
  CVec a;

  // Seeds: the first pair fixes the base weights a; later pairs are carried
  // over to a by one homotopy each.
  for (int s = 0; s < cfg.seed_points; ++s) {
    CVec x0, w;
    if (!seed_pair(p, family, rng, x0, w)) break;
    if (a.size() == 0) {
      a = w;
      base.insert(x0);
      continue;
    }
    auto r = run(p, {x0}, {{w, a}}, cfg);
    if (r[0].status == TrackStatus::Success) base.insert(r[0].x);
  }
  if (a.size() == 0) {
    // Fallback: multi-start Newton at random family weights.
    a = random_weights(family, rng);
    for (int s = 0; s < cfg.starts; ++s) {
      double scale = s % 10 == 9 ? 10.0 : 1.0;
      auto nr = newton_solve(p, gaussian(rng, static_cast<Eigen::Index>(p.dim()), scale), a, cfg.max_iter,
                             cfg.tol_residual, cfg.tol_degenerate);
      if (nr.converged && sup(nr.x) < 1e6) base.insert(nr.x);
    }
  }
  if (base.points().empty()) throw Error(ErrorCode::NoConvergence, "no seed solution for the potential");

  CriticalPointSet out;
  int quiet = 0;
  while (quiet < cfg.stabilization_rounds && out.monodromy_loops < cfg.max_loops) {
    ++out.monodromy_loops;
    CVec b = random_weights(family, rng), c = random_weights(family, rng);
    auto res = run(p, base.points(), {{a, b}, {b, c}, {c, a}}, cfg);
    bool fresh = false;
    for (const auto& r : res)
      if (r.status == TrackStatus::Success && base.insert(r.x)) fresh = true;
    // A fresh seed per loop: loops alone can miss a sheet of a low-degree cover.
    CVec x0, w;
    if (seed_pair(p, family, rng, x0, w)) {
      auto r = run(p, {x0}, {{w, a}}, cfg);
      if (r[0].status == TrackStatus::Success && base.insert(r[0].x)) fresh = true;
    }
    quiet = fresh ? 0 : quiet + 1;
  }
  out.stable = quiet >= cfg.stabilization_rounds;
  out.base_count = static_cast<int>(base.points().size());

  // Homotopy to the normalized target, then polish at the true scale.
  const double tscale = sup(target);
  if (tscale == 0) throw Error(ErrorCode::DegenerateS, "all weights vanish");
  const CVec goal = target / tscale;
  auto res = run(p, base.points(), {{a, goal}}, cfg);
  SolutionSet found(cfg.tol_dedupe);
  std::vector<double> residuals;
  int arrived = 0;
  for (const auto& r : res) {
    if (r.status != TrackStatus::Success) continue;
    auto nr = newton_solve(p, r.x, goal, cfg.max_iter, cfg.tol_residual, cfg.tol_degenerate);
    if (!nr.converged || p.min_factor_abs(nr.x) < cfg.tol_degenerate || sup(nr.x) > cfg.tracker.max_norm) continue;
    ++arrived;
    found.insert(nr.x);
  }
  out.converged_fraction = res.empty() ? 0.0 : static_cast<double>(arrived) / static_cast<double>(res.size());
  out.points = found.points();
  std::sort(out.points.begin(), out.points.end(), point_less);
  for (const auto& x : out.points) {
    out.residuals.push_back(relative_residual(p, x, goal, cfg.tol_degenerate));
    CVec g;
    CMat j;
    p.gradient_jacobian(x, target, g, j, 0.0);
    out.hessian_dets.push_back(j.determinant());
  }
  return out;
}

nlohmann::json to_json(const CriticalPointSet& s) {
  nlohmann::json pts = nlohmann::json::array(), dets = nlohmann::json::array();
  for (const auto& x : s.points) {
    nlohmann::json v = nlohmann::json::array();
    for (Eigen::Index k = 0; k < x.size(); ++k) v.push_back({{"re", x[k].real()}, {"im", x[k].imag()}});
    pts.push_back(v);
  }
  for (const auto& d : s.hessian_dets) dets.push_back({{"re", d.real()}, {"im", d.imag()}});
  return {{"count", s.points.size()},
          {"stable", s.stable},
          {"points", pts},
          {"residuals", s.residuals},
          {"hessian_dets", dets},
          {"converged_fraction", s.converged_fraction},
          {"monodromy_loops", s.monodromy_loops}};
}

CriticalPointSet critical_point_set_from_json(const nlohmann::json& j) {
  try {
    CriticalPointSet s;
    s.stable = j.at("stable").get<bool>();
    for (const auto& v : j.at("points")) {
      CVec x(static_cast<Eigen::Index>(v.size()));
      for (std::size_t k = 0; k < v.size(); ++k) x[static_cast<Eigen::Index>(k)] = {v[k].at("re").get<double>(), v[k].at("im").get<double>()};
      s.points.push_back(x);
    }
    s.residuals = j.at("residuals").get<std::vector<double>>();
    if (j.contains("hessian_dets"))
      for (const auto& d : j["hessian_dets"]) s.hessian_dets.emplace_back(d.at("re").get<double>(), d.at("im").get<double>());
    s.converged_fraction = j.value("converged_fraction", 0.0);
    s.monodromy_loops = j.value("monodromy_loops", 0);
    if (j.at("count").get<std::size_t>() != s.points.size()) throw Error(ErrorCode::ParseError, "count does not match points");
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace minkin
