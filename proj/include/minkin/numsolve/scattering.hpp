#pragma once

#include <complex>
#include <map>
#include <vector>

#include "minkin/combinat/hypertree.hpp"
#include "minkin/kinematics/mandelstam.hpp"
#include "minkin/numsolve/solver.hpp"

namespace minkin {

// Potential Σ_{e in support, s_e != 0} s_e log p_e on the GR2 chart.
LogPotential gr2_potential(int n, const std::vector<Pair>& terms);

// Critical points of L on the support at s. The monodromy family is the
// kinematic subspace s lives in: for conserving s, conservation plus every
// exactly-zero pair plus the declared zero poles; otherwise free weights on
// the support.
CriticalPointSet solve_critical(const std::vector<Pair>& support, const MandelstamPoint& s, const NumSolveConfig& cfg);

struct MlDegree {
  int count = 0;
  bool stable = false;
  std::vector<int> trial_counts;
};

// Majority count over `trials` generic samples of the subspace (seeds
// derived from cfg.seed); stable iff every trial agrees and stabilizes.
MlDegree ml_degree(const std::vector<Pair>& support, const KinematicConstraints& constraints, const NumSolveConfig& cfg,
                   int trials);
KinematicConstraints hypertree_constraints(const Hypertree& h, const std::vector<std::vector<int>>& zero_poles = {});
MlDegree hypertree_ml_degree(const Hypertree& h, const std::vector<std::vector<int>>& zero_poles,
                             const NumSolveConfig& cfg, int trials);

struct HypertreeAmplitude {
  std::complex<double> value;
  int count = 0;
  bool stable = false;
  const char* convention = "";
};

// Σ over critical points of I_T² / det(-∇²L), I_T = Δ(M_T)² / Π p from the
// chart. With `restrict` the non-edge s must vanish (INCONSISTENT_CONSTRAINTS
// otherwise); without it the full potential on all pairs is used.
HypertreeAmplitude hypertree_amplitude(const Hypertree& h, const MandelstamPoint& s, const NumSolveConfig& cfg,
                                       bool restrict);

struct RealnessVerdict {
  bool all_real = false;
  std::vector<int> counts;
  double max_imag = 0;
};

// Full-support potentials at positive integer s on S.
RealnessVerdict realness_check(int n, const NumSolveConfig& cfg, int trials);

using TripleValues = std::map<Triple, BigRational>;

// The Gr(3,6) potential Σ 𝔰_ijk log p_ijk on the GR36 chart.
CriticalPointSet cegm36_solve(const TripleValues& s3, const NumSolveConfig& cfg);

// Conserving Gr(3,6) kinematics: Σ_{j<k} 𝔰_ijk = 0 for each i, with the
// given triples forced to zero; sampled like sample_subspace.
TripleValues sample_cegm36(const std::vector<Triple>& zero_triples, std::uint64_t seed);
// 𝔰_135 = 𝔰_235 = 𝔰_246 = 𝔰_256 = 𝔰_356 = 𝔰_245 = 0.
std::vector<Triple> cegm36_restricted_zeros();

}  // namespace minkin
