#include "minkin/numsolve/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "minkin/amplitude/onshell.hpp"
#include "minkin/amplitude/two_tree_amplitude.hpp"
#include "minkin/combinat/text_format.hpp"
#include "minkin/error.hpp"
#include "minkin/moduli/chart.hpp"

namespace minkin {

namespace {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 step, so nearby seeds give unrelated streams.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ParameterFamily project_family(const std::vector<std::vector<BigInt>>& basis, const std::vector<std::size_t>& rows) {
  ParameterFamily f;
  f.basis = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < rows.size(); ++r)
      f.basis(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = basis[c][rows[r]].get_d();
  return f;
}

ParameterFamily free_family(std::size_t terms) {
  return {Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(terms), static_cast<Eigen::Index>(terms))};
}

const std::vector<Triple>& all_triples6() {
  static const std::vector<Triple> t = [] {
    std::vector<Triple> v;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        for (int k = j + 1; k <= 6; ++k) v.push_back({i, j, k});
    return v;
  }();
  return t;
}

std::vector<std::vector<BigInt>> cegm_basis(const std::vector<Triple>& zeros) {
  const auto& triples = all_triples6();
  std::vector<std::vector<BigRational>> rows;
  for (int i = 1; i <= 6; ++i) {
    std::vector<BigRational> r(triples.size(), 0);
    for (std::size_t t = 0; t < triples.size(); ++t)
      if (std::count(triples[t].begin(), triples[t].end(), i)) r[t] = 1;
    rows.push_back(r);
  }
  for (const auto& z : zeros) {
    std::vector<BigRational> r(triples.size(), 0);
    r[static_cast<std::size_t>(std::find(triples.begin(), triples.end(), z) - triples.begin())] = 1;
    rows.push_back(r);
  }
  RationalMatrix m(rows.size(), triples.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < triples.size(); ++c) m(r, c) = rows[r][c];
  return nullspace_rational(m);
}

// Forms a generic sample must avoid: the live pairs and every multi-particle
// pole that is not identically zero on the constrained subspace. A vanishing
// pole lets critical points escape to the boundary.
std::vector<LinearForm> generic_forms(const KinematicConstraints& c, const std::vector<Pair>& live) {
  std::vector<LinearForm> out = pair_forms(live);
  const auto pairs = all_pairs(c.n);
  const auto basis = subspace_basis(c);
  for (int mask = 0; mask < (1 << c.n); ++mask) {
    std::vector<int> subset;
    for (int b = 0; b < c.n; ++b)
      if (mask >> b & 1) subset.push_back(b + 1);
    if (subset.size() < 3 || subset.size() + 3 > static_cast<std::size_t>(c.n)) continue;
    LinearForm pole = multi_pole_form(subset);
    bool structural = true;
    for (const auto& v : basis) {
      BigInt acc = 0;
      for (std::size_t k = 0; k < pairs.size(); ++k) acc += v[k] * pole.coefficient(pairs[k]);
      if (acc != 0) structural = false;
    }
    if (!structural) out.push_back(pole);
  }
  return out;
}

}  // namespace

LogPotential gr2_potential(int n, const std::vector<Pair>& terms) {
  GaugeChart chart = GaugeChart::gr2(n);
  std::vector<SparsePoly> f;
  std::vector<std::string> labels;
  for (Pair e : terms) {
    SparsePoly p = pluecker2(chart, e.i, e.j);
    if (p.is_constant()) continue;
    f.push_back(p);
    labels.push_back(pair_label(e));
  }
  return LogPotential(f, labels);
}

CriticalPointSet solve_critical(const std::vector<Pair>& support, const MandelstamPoint& s, const NumSolveConfig& cfg) {
  GaugeChart chart = GaugeChart::gr2(s.n());
  std::vector<Pair> terms;
  for (Pair e : support)
    if (s(e) != 0 && !pluecker2(chart, e.i, e.j).is_constant()) terms.push_back(e);
  if (terms.empty()) throw Error(ErrorCode::NoConvergence, "potential has no non-constant terms");
  LogPotential pot = gr2_potential(s.n(), terms);
  CVec target(static_cast<Eigen::Index>(terms.size()));
  for (std::size_t k = 0; k < terms.size(); ++k) target[static_cast<Eigen::Index>(k)] = s(terms[k]).get_d();
  ParameterFamily family;
  if (s.conserves_momentum()) {
    KinematicConstraints c{s.n(), true, {}, s.zero_poles()};
    for (Pair p : all_pairs(s.n()))
      if (s(p) == 0) c.zero_pairs.push_back(p);
    const auto pairs = all_pairs(s.n());
    std::vector<std::size_t> rows;
    for (Pair e : terms) rows.push_back(static_cast<std::size_t>(std::find(pairs.begin(), pairs.end(), e) - pairs.begin()));
    family = project_family(subspace_basis(c), rows);
  } else {
    family = free_family(terms.size());
  }
  return solve_in_family(pot, family, target, cfg);
}

MlDegree ml_degree(const std::vector<Pair>& support, const KinematicConstraints& constraints, const NumSolveConfig& cfg,
                   int trials) {
  if (trials < 1) throw Error(ErrorCode::BadIndex, "ml_degree needs at least one trial");
  std::vector<Pair> live;
  for (Pair e : support)
    if (std::find(constraints.zero_pairs.begin(), constraints.zero_pairs.end(), e) == constraints.zero_pairs.end())
      live.push_back(e);
  const auto avoid = generic_forms(constraints, live);
  MlDegree out;
  out.stable = true;
  for (int t = 0; t < trials; ++t) {
    MandelstamPoint s = sample_subspace(constraints, derive_seed(cfg.seed, 2 * static_cast<std::uint64_t>(t)), avoid);
    NumSolveConfig c = cfg;
    c.seed = derive_seed(cfg.seed, 2 * static_cast<std::uint64_t>(t) + 1);
    auto set = solve_critical(support, s, c);
    out.trial_counts.push_back(static_cast<int>(set.count()));
    // The target is generic in its family, so every base solution must
    // arrive at a distinct critical point.
    if (!set.stable || set.base_count != static_cast<int>(set.count())) out.stable = false;
  }
  std::map<int, int> freq;
  for (int k : out.trial_counts) ++freq[k];
  int best = -1;
  for (const auto& [k, f] : freq)
    if (f > best) {
      best = f;
      out.count = k;
    }
  if (freq.size() > 1) out.stable = false;
  return out;
}

KinematicConstraints hypertree_constraints(const Hypertree& h, const std::vector<std::vector<int>>& zero_poles) {
  return {h.n(), true, h.non_edges(), zero_poles};
}

MlDegree hypertree_ml_degree(const Hypertree& h, const std::vector<std::vector<int>>& zero_poles,
                             const NumSolveConfig& cfg, int trials) {
  return ml_degree(all_pairs(h.n()), hypertree_constraints(h, zero_poles), cfg, trials);
}

HypertreeAmplitude hypertree_amplitude(const Hypertree& h, const MandelstamPoint& s, const NumSolveConfig& cfg,
                                       bool restrict) {
  if (s.n() != h.n()) throw Error(ErrorCode::DimensionMismatch, "s and hypertree have different n");
  if (!s.row_sums_zero()) throw Error(ErrorCode::InconsistentConstraints, "hypertree amplitudes need conserving s");
  if (restrict)
    for (Pair e : h.non_edges())
      if (s(e) != 0) throw Error(ErrorCode::InconsistentConstraints, "non-edge s" + pair_label(e) + " is not zero");
  MandelstamPoint target = s;
  target.set_conserves(true);
  CriticalPointSet set = solve_critical(all_pairs(h.n()), target, cfg);
  // Δ² over the minors, evaluated factor by factor: the expanded denominator
  // cancels badly when points of the configuration nearly collide.
  const OnShellMatrix m = matrix_MT(h);
  const SparsePoly dl = delta(m);
  const std::vector<SparsePoly> minors = triple_minor_product_factors(m);
  HypertreeAmplitude out;
  out.count = static_cast<int>(set.count());
  out.stable = set.stable;
  out.convention = kAmplitudeConvention;
  const int d = h.n() - 3;
  for (std::size_t k = 0; k < set.points.size(); ++k) {
    std::vector<std::complex<double>> x(set.points[k].data(), set.points[k].data() + set.points[k].size());
    std::complex<double> i = dl.evaluate(std::span<const std::complex<double>>(x));
    i *= i;
    for (const auto& f : minors) i /= f.evaluate(std::span<const std::complex<double>>(x));
    std::complex<double> neg_det = (d % 2 == 0 ? 1.0 : -1.0) * set.hessian_dets[k];
    out.value += i * i / neg_det;
  }
  return out;
}

RealnessVerdict realness_check(int n, const NumSolveConfig& cfg, int trials) {
  RealnessVerdict v;
  v.all_real = true;
  auto S = basis_S(n);
  for (int t = 0; t < trials; ++t) {
    std::mt19937_64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(t)));
    std::uniform_int_distribution<int> pos(1, 999);
    MandelstamPoint s(n);
    for (Pair e : S) s.set(e, pos(rng));
    NumSolveConfig c = cfg;
    c.seed = derive_seed(cfg.seed, 1000 + static_cast<std::uint64_t>(t));
    auto set = solve_critical(S, s, c);
    v.counts.push_back(static_cast<int>(set.count()));
    for (const auto& x : set.points) v.max_imag = std::max(v.max_imag, x.imag().cwiseAbs().maxCoeff());
  }
  v.all_real = v.max_imag <= 1e-8;
  return v;
}

CriticalPointSet cegm36_solve(const TripleValues& s3, const NumSolveConfig& cfg) {
  GaugeChart chart = GaugeChart::gr36();
  const auto& triples = all_triples6();
  std::vector<SparsePoly> f;
  std::vector<std::string> labels;
  std::vector<std::size_t> rows;
  std::vector<double> w;
  for (std::size_t t = 0; t < triples.size(); ++t) {
    auto it = s3.find(triples[t]);
    if (it == s3.end() || it->second == 0) continue;
    SparsePoly p = pluecker3(chart, triples[t][0], triples[t][1], triples[t][2]);
    if (p.is_constant()) continue;
    f.push_back(p);
    labels.push_back(format_triples({triples[t]}));
    rows.push_back(t);
    w.push_back(it->second.get_d());
  }
  if (f.empty()) throw Error(ErrorCode::NoConvergence, "potential has no non-constant terms");
  LogPotential pot(f, labels);
  bool conserving = true;
  for (int i = 1; i <= 6; ++i) {
    BigRational r = 0;
    for (const auto& [t, v] : s3)
      if (std::count(t.begin(), t.end(), i)) r += v;
    if (r != 0) conserving = false;
  }
  ParameterFamily family;
  if (conserving) {
    std::vector<Triple> zeros;
    for (const auto& t : triples) {
      auto it = s3.find(t);
      if (it == s3.end() || it->second == 0) zeros.push_back(t);
    }
    family = project_family(cegm_basis(zeros), rows);
  } else {
    family = free_family(f.size());
  }
  CVec target = Eigen::Map<Eigen::VectorXd>(w.data(), static_cast<Eigen::Index>(w.size())).cast<std::complex<double>>();
  return solve_in_family(pot, family, target, cfg);
}

TripleValues sample_cegm36(const std::vector<Triple>& zero_triples, std::uint64_t seed) {
  auto basis = cegm_basis(zero_triples);
  if (basis.empty()) throw Error(ErrorCode::InconsistentConstraints, "constraints leave only the zero point");
  const auto& triples = all_triples6();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-999, 999);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<BigInt> v(triples.size(), 0);
    for (const auto& b : basis) {
      BigInt k = coef(rng);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += k * b[i];
    }
    TripleValues out;
    bool ok = true;
    for (std::size_t t = 0; t < triples.size(); ++t) {
      bool forced = std::find(zero_triples.begin(), zero_triples.end(), triples[t]) != zero_triples.end();
      if (!forced && v[t] == 0) ok = false;
      out[triples[t]] = BigRational(v[t]);
    }
    if (ok) return out;
  }
  throw Error(ErrorCode::SamplingExhausted, "no generic Gr(3,6) sample after 1000 draws");
}

std::vector<Triple> cegm36_restricted_zeros() {
  return {{1, 3, 5}, {2, 3, 5}, {2, 4, 6}, {2, 5, 6}, {3, 5, 6}, {2, 4, 5}};
}

}  // namespace minkin
