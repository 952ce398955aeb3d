#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <json.hpp>

#include "minkin/numsolve/system.hpp"
#include "minkin/numsolve/tracker.hpp"

namespace minkin {

struct NumSolveConfig {
  int starts = 2000;               // Newton multi-start seeds (fallback seeding)
  int max_iter = 200;              // Newton iterations per polish or start
  double tol_residual = 1e-11;     // scale-relative gradient sup-norm
  double tol_dedupe = 1e-7;        // sup-norm relative to 1 + |x|
  double tol_degenerate = 1e-10;   // minimum |f_e| at an accepted point
  std::uint64_t seed = 0;
  int stabilization_rounds = 5;    // consecutive monodromy loops without news
  int max_loops = 200;
  int seed_points = 3;             // independent seed solutions merged at the base point
  bool parallel = true;            // OpenMP kernel vs serial reference
  TrackerOptions tracker;
};

// Real linear family of weight vectors w = B θ, θ complex; columns of B
// span the admissible weights of the potential's terms.
struct ParameterFamily {
  Eigen::MatrixXd basis;  // terms x k
};

struct CriticalPointSet {
  std::vector<CVec> points;
  std::vector<double> residuals;
  std::vector<std::complex<double>> hessian_dets;  // det ∇²L at the point, unnormalized weights
  double converged_fraction = 0;
  bool stable = false;
  int monodromy_loops = 0;
  int base_count = 0;  // solutions at the generic base point
  std::size_t count() const { return points.size(); }
};

// Monodromy over the family to collect all solutions at a random base point,
// then parameter homotopy to `target`. NO_CONVERGENCE if no seed solution is
// found at all. Points are polished, filtered, deduplicated and sorted
// lexicographically by (real, imaginary) parts.
CriticalPointSet solve_in_family(const LogPotential& p, const ParameterFamily& family, const CVec& target,
                                 const NumSolveConfig& cfg);

// Deterministic lexicographic order used for all outputs.
bool point_less(const CVec& a, const CVec& b);

nlohmann::json to_json(const CriticalPointSet& s);
CriticalPointSet critical_point_set_from_json(const nlohmann::json& j);

}  // namespace minkin
