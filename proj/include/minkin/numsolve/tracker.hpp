#pragma once

#include <vector>

#include "minkin/numsolve/system.hpp"

namespace minkin {

struct TrackerOptions {
  double h_init = 0.02;
  double h_max = 0.1;
  double h_min = 1e-12;
  int corrector_iters = 3;
  double corrector_tol = 1e-10;  // relative to 1 + |x|
  double max_norm = 1e8;
  long max_steps = 200000;
  double floor = 1e-14;          // |f_e| below this aborts the path
};

enum class TrackStatus { Success, StepFailure, Diverged, Singular };

struct TrackResult {
  TrackStatus status = TrackStatus::StepFailure;
  CVec x;
  long steps = 0;
};

// One leg of a parameter path: weights move on the straight segment from
// `from` to `to`.
struct Leg {
  CVec from;
  CVec to;
};

// Follows x(t) with g(x(t); w(t)) = 0 along each leg in turn, using an RK4
// predictor on dx/dt = -J^{-1} A(x) (to - from) and a Newton corrector.
TrackResult track_path(const LogPotential& p, const CVec& x0, const std::vector<Leg>& legs, const TrackerOptions& opt);

// Batch kernels: every start follows the same legs. The serial version is the
// reference; the OpenMP version must agree with it bitwise.
std::vector<TrackResult> track_batch_serial(const LogPotential& p, const std::vector<CVec>& starts,
                                            const std::vector<Leg>& legs, const TrackerOptions& opt);
std::vector<TrackResult> track_batch_parallel(const LogPotential& p, const std::vector<CVec>& starts,
                                              const std::vector<Leg>& legs, const TrackerOptions& opt);

struct NewtonResult {
  bool converged = false;
  CVec x;
  double residual = 0;  // sup-norm of g divided by max(1, sup-norm of the term scale)
  int iterations = 0;
};

// Damped Newton (step halving on residual increase) at fixed weights.
NewtonResult newton_solve(const LogPotential& p, const CVec& x0, const CVec& w, int max_iter, double tol,
                          double floor);

// Scale-aware residual of g(x; w) as used by newton_solve; +inf if degenerate.
double relative_residual(const LogPotential& p, const CVec& x, const CVec& w, double floor);

}  // namespace minkin
