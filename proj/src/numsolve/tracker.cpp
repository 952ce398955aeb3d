#include "minkin/numsolve/tracker.hpp"

#include <cmath>

namespace minkin {

namespace {

double sup(const CVec& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

// dx/dt at (x, w) for weight velocity dw; false on singular Jacobian.
bool velocity(const LogPotential& p, const CVec& x, const CVec& w, const CVec& dw, CVec& out, double floor) {
  CMat a, j;
  CVec g;
  if (!p.term_matrix(x, a, floor) || !p.gradient_jacobian(x, w, g, j, floor)) return false;
  Eigen::PartialPivLU<CMat> lu(j);
  out = -lu.solve(a * dw);
  return out.allFinite();
}

bool correct(const LogPotential& p, CVec& x, const CVec& w, const TrackerOptions& opt) {
  CVec g;
  CMat j;
  for (int it = 0; it < opt.corrector_iters; ++it) {
    if (!p.gradient_jacobian(x, w, g, j, opt.floor)) return false;
    CVec dx = Eigen::PartialPivLU<CMat>(j).solve(-g);
    if (!dx.allFinite()) return false;
    x += dx;
    if (sup(dx) <= opt.corrector_tol * (1.0 + sup(x))) return true;
  }
  return false;
}

TrackStatus track_leg(const LogPotential& p, CVec& x, const Leg& leg, const TrackerOptions& opt, long& steps) {
  const CVec dw = leg.to - leg.from;
  double t = 0.0, h = opt.h_init;
  while (t < 1.0) {
    if (++steps > opt.max_steps) return TrackStatus::StepFailure;
    h = std::min(h, 1.0 - t);
    CVec k1, k2, k3, k4;
    auto w_at = [&](double s) -> CVec { return leg.from + s * dw; };
    bool ok = velocity(p, x, w_at(t), dw, k1, opt.floor) &&
              velocity(p, x + 0.5 * h * k1, w_at(t + 0.5 * h), dw, k2, opt.floor) &&
              velocity(p, x + 0.5 * h * k2, w_at(t + 0.5 * h), dw, k3, opt.floor) &&
              velocity(p, x + h * k3, w_at(t + h), dw, k4, opt.floor);
    CVec xn;
    if (ok) {
      xn = x + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      ok = correct(p, xn, w_at(t + h), opt);
      // Reject steps that jump far relative to the predicted motion, which
      // signals path jumping.
      if (ok && sup(xn - x) > 10.0 * (h * sup(k1) + 1e-8 * (1.0 + sup(x)))) ok = false;
    }
    if (ok) {
      x = xn;
      t += h;
      h = std::min(2.0 * h, opt.h_max);
      if (sup(x) > opt.max_norm) return TrackStatus::Diverged;
    } else {
      h *= 0.5;
      if (h < opt.h_min) return sup(x) > 1e4 ? TrackStatus::Diverged : TrackStatus::Singular;
    }
  }
  return TrackStatus::Success;
}

}  // namespace

TrackResult track_path(const LogPotential& p, const CVec& x0, const std::vector<Leg>& legs, const TrackerOptions& opt) {
  TrackResult r;
  r.x = x0;
  for (const Leg& leg : legs) {
    r.status = track_leg(p, r.x, leg, opt, r.steps);
    if (r.status != TrackStatus::Success) return r;
  }
  r.status = TrackStatus::Success;
  return r;
}

std::vector<TrackResult> track_batch_serial(const LogPotential& p, const std::vector<CVec>& starts,
                                            const std::vector<Leg>& legs, const TrackerOptions& opt) {
  std::vector<TrackResult> out(starts.size());
  for (std::size_t k = 0; k < starts.size(); ++k) out[k] = track_path(p, starts[k], legs, opt);
  return out;
}

std::vector<TrackResult> track_batch_parallel(const LogPotential& p, const std::vector<CVec>& starts,
                                              const std::vector<Leg>& legs, const TrackerOptions& opt) {
  std::vector<TrackResult> out(starts.size());
  const long count = static_cast<long>(starts.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = track_path(p, starts[static_cast<std::size_t>(k)], legs, opt);
  return out;
}

double relative_residual(const LogPotential& p, const CVec& x, const CVec& w, double floor) {
  CMat a;
  if (!p.term_matrix(x, a, floor)) return INFINITY;
  CVec g = a * w;
  double scale = 1.0;
  for (Eigen::Index e = 0; e < a.cols(); ++e) scale = std::max(scale, std::abs(w[e]) * sup(a.col(e)));
  return sup(g) / scale;
}

NewtonResult newton_solve(const LogPotential& p, const CVec& x0, const CVec& w, int max_iter, double tol,
                          double floor) {
  NewtonResult r;
  r.x = x0;
  r.residual = relative_residual(p, r.x, w, floor);
  CVec g;
  CMat j;
  for (r.iterations = 0; r.iterations < max_iter; ++r.iterations) {
    if (r.residual <= tol) {
      r.converged = true;
      return r;
    }
    if (!p.gradient_jacobian(r.x, w, g, j, floor)) return r;
    CVec dx = Eigen::PartialPivLU<CMat>(j).solve(-g);
    if (!dx.allFinite()) return r;
    double step = 1.0;
    bool improved = false;
    for (int halving = 0; halving < 30; ++halving, step *= 0.5) {
      CVec trial = r.x + step * dx;
      double res = relative_residual(p, trial, w, floor);
      if (res < r.residual) {
        r.x = trial;
        r.residual = res;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  r.converged = r.residual <= tol;
  return r;
}

}  // namespace minkin
