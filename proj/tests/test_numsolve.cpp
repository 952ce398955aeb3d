#include <doctest.h>

#include <random>

#include "minkin/amplitude/two_tree_amplitude.hpp"
#include "minkin/combinat/text_format.hpp"
#include "minkin/error.hpp"
#include "minkin/horn/horn.hpp"
#include "minkin/moduli/chart.hpp"
#include "minkin/numsolve/scattering.hpp"

using namespace minkin;

namespace {

std::vector<Pair> full_support(int n) {
  std::vector<Pair> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

// Random signed weights on the support, resampled until no boundary pole
// vanishes. Weights on S are the chart coordinates of conserving kinematics,
// so the poles are those of the conserving completion; poles that vanish
// identically on the support are structural and allowed.
MandelstamPoint random_point(const std::vector<Pair>& support, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(1, 50);
  auto forms = conservation_forms(n);
  auto basis = basis_S(n);
  for (;;) {
    MandelstamPoint s(n);
    std::map<Pair, BigRational> on_s;
    for (Pair e : support) s.set(e, d(rng) * (d(rng) % 2 ? 1 : -1));
    for (Pair e : basis) on_s[e] = s(e);
    MandelstamPoint full = complete_conservation(n, on_s);
    bool generic = true;
    for (int mask = 0; mask < (1 << n) && generic; ++mask) {
      std::vector<int> subset;
      for (int b = 0; b < n; ++b)
        if (mask >> b & 1) subset.push_back(b + 1);
      if (subset.size() < 2 || subset.size() > static_cast<std::size_t>(n - 2)) continue;
      LinearForm pole;
      for (std::size_t a = 0; a < subset.size(); ++a)
        for (std::size_t b = a + 1; b < subset.size(); ++b) pole += forms.at({subset[a], subset[b]});
      bool structural = true;
      for (Pair e : support)
        if (pole.coefficient(e) != 0) structural = false;
      if (!structural && multi_pole(full, subset) == 0) generic = false;
    }
    if (generic) return s;
  }
}

bool bitwise_equal(const CriticalPointSet& a, const CriticalPointSet& b) {
  if (a.count() != b.count() || a.residuals != b.residuals) return false;
  for (std::size_t k = 0; k < a.count(); ++k)
    if (!(a.points[k].array() == b.points[k].array()).all()) return false;
  return true;
}

NumSolveConfig config(std::uint64_t seed) {
  NumSolveConfig cfg;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("compiled polynomials agree with exact evaluation") {
  auto names = chart_variable_names(3);
  SparsePoly x = SparsePoly::variable(names, 0), y = SparsePoly::variable(names, 1), z = SparsePoly::variable(names, 2);
  SparsePoly f = x * y * z - BigRational(3) * x.pow(2) + z + SparsePoly::constant(names, 2);
  CompiledPoly c(f);
  CVec v(3);
  v << std::complex<double>(0.5, 1), std::complex<double>(-2, 0.25), std::complex<double>(1.5, -1);
  std::vector<std::complex<double>> vv(v.data(), v.data() + 3);
  std::complex<double> val;
  CVec grad;
  CMat hess;
  c.evaluate(v, val, grad, &hess);
  CHECK(std::abs(val - f.evaluate(vv)) < 1e-12);
  CHECK(std::abs(c.value(v) - val) < 1e-12);
  for (int a = 0; a < 3; ++a) {
    CHECK(std::abs(grad[a] - f.derivative(a).evaluate(vv)) < 1e-12);
    for (int b = 0; b < 3; ++b) CHECK(std::abs(hess(a, b) - f.derivative(a).derivative(b).evaluate(vv)) < 1e-12);
  }
  CHECK_FALSE(c.is_affine());
  CHECK(CompiledPoly(x - y).is_affine());
}

TEST_CASE("log potential Jacobian matches finite differences") {
  LogPotential p = gr2_potential(6, full_support(6));
  CVec x(3), w(p.terms());
  x << std::complex<double>(0.3, 0.2), std::complex<double>(-1.1, 0.4), std::complex<double>(2.2, -0.7);
  for (Eigen::Index k = 0; k < w.size(); ++k) w[k] = std::complex<double>(1.0 + k, 0.5 * k - 2);
  CVec g;
  CMat j;
  REQUIRE(p.gradient_jacobian(x, w, g, j, 1e-14));
  const double h = 1e-7;
  for (int a = 0; a < 3; ++a) {
    CVec xp = x, xm = x, gp, gm;
    xp[a] += h;
    xm[a] -= h;
    p.gradient(xp, w, gp, 1e-14);
    p.gradient(xm, w, gm, 1e-14);
    CVec fd = (gp - gm) / (2 * h);
    for (int b = 0; b < 3; ++b) CHECK(std::abs(fd[b] - j(b, a)) < 1e-5 * (1 + std::abs(j(b, a))));
  }
  CMat a;
  REQUIRE(p.term_matrix(x, a, 1e-14));
  CHECK((a * w - g).norm() < 1e-12);
}

TEST_CASE("Newton finds the coin-flip estimate") {
  LogPotential p = gr2_potential(4, {{1, 3}, {2, 3}});
  CVec w(2), x0(1);
  w << 3.0, 5.0;
  x0 << 0.3;
  auto r = newton_solve(p, x0, w, 50, 1e-13, 1e-14);
  REQUIRE(r.converged);
  CHECK(std::abs(r.x[0] - 3.0 / 8.0) < 1e-12);
  CHECK(relative_residual(p, r.x, w, 1e-14) < 1e-13);
}

TEST_CASE("serial and parallel tracking agree bitwise") {
  const int n = 6;
  auto support = full_support(n);
  MandelstamPoint s = random_point(support, n, 3);
  auto set = solve_critical(support, s, config(1));
  REQUIRE(set.count() == 6);
  LogPotential p = gr2_potential(n, support);
  CVec from(p.terms()), to(p.terms());
  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  for (std::size_t k = 0; k < p.terms(); ++k) {
    from[k] = s(parse_pair_label(p.labels()[k])).get_d();
    to[k] = {g(rng), g(rng)};
  }
  std::vector<Leg> legs{{from, to}, {to, from}};
  auto serial = track_batch_serial(p, set.points, legs, {});
  auto parallel = track_batch_parallel(p, set.points, legs, {});
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t k = 0; k < serial.size(); ++k) {
    CHECK(serial[k].status == parallel[k].status);
    CHECK(serial[k].steps == parallel[k].steps);
    CHECK((serial[k].x.array() == parallel[k].x.array()).all());
  }
  // A closed loop returns to some start.
  for (const auto& r : serial) {
    if (r.status != TrackStatus::Success) continue;
    double best = 1e300;
    for (const auto& q : set.points) best = std::min(best, (r.x - q).cwiseAbs().maxCoeff());
    CHECK(best < 1e-6);
  }
}

TEST_CASE("full-support counts, determinism and kernel equivalence") {
  for (int n = 4; n <= 6; ++n) {
    auto support = full_support(n);
    MandelstamPoint s = random_point(support, n, 10 + n);
    NumSolveConfig cfg = config(5);
    auto par = solve_critical(support, s, cfg);
    cfg.parallel = false;
    auto ser = solve_critical(support, s, cfg);
    const std::size_t expected[] = {1, 2, 6};
    CHECK(par.count() == expected[n - 4]);
    CHECK(par.stable);
    CHECK(bitwise_equal(par, ser));
    CHECK(bitwise_equal(par, solve_critical(support, s, config(5))));
    CHECK(to_json(par).dump() == to_json(solve_critical(support, s, config(5))).dump());
  }
}

TEST_CASE("numerical 2-tree points match the exact Horn point") {
  for (int n = 4; n <= 7; ++n) {
    auto trees = enumerate_two_trees(n);
    for (std::size_t k = 0; k < trees.size(); ++k)
      for (int draw = 0; draw < 3; ++draw) {
        const TwoTree& t = trees[k];
        MandelstamPoint s = random_tree_point(t, 31 * k + draw);
        auto set = solve_critical(t.support(), s, config(k + draw));
        REQUIRE(set.count() == 1);
        auto cp = critical_point(t, s);
        for (std::size_t a = 0; a < cp.x_hat.size(); ++a)
          REQUIRE(std::abs(set.points[0][a] - cp.x_hat[a].get_d()) <= 1e-9 * (1 + std::abs(cp.x_hat[a].get_d())));
        double h = hessian_closed_form(t).evaluate(s.values()).get_d();
        REQUIRE(std::abs(set.hessian_dets[0] - h) <= 1e-9 * std::abs(h));
      }
  }
}

TEST_CASE("adding an edge to a 2-tree raises the count") {
  for (int n = 5; n <= 6; ++n) {
    auto trees = enumerate_two_trees(n);
    for (std::size_t k = 0; k < trees.size(); k += 2) {
      const TwoTree& t = trees[k];
      for (Pair e : basis_S(n)) {
        if (t.has_edge(e)) continue;
        auto support = t.support();
        support.push_back(e);
        MandelstamPoint s = random_point(support, n, 7 * k + e.i * 10 + e.j);
        INFO(t.to_string(), " + ", pair_label(e));
        CHECK(solve_critical(support, s, config(k)).count() >= 2);
      }
    }
  }
}

TEST_CASE("critical point sets round trip through JSON") {
  auto support = full_support(5);
  auto set = solve_critical(support, random_point(support, 5, 4), config(2));
  auto j = to_json(set);
  CHECK(j["count"] == 2);
  CHECK(j["stable"] == true);
  auto back = critical_point_set_from_json(j);
  CHECK(to_json(back).dump() == j.dump());
  REQUIRE(back.count() == set.count());
  for (std::size_t k = 0; k < set.count(); ++k) CHECK((back.points[k] - set.points[k]).norm() == 0);
}

TEST_CASE("ML degrees on kinematic subspaces") {
  Hypertree oct(6, parse_triples("123,345,156,246"));
  auto m = hypertree_ml_degree(oct, {}, config(7), 3);
  CHECK(m.count == 2);
  CHECK(m.stable);
  auto m1 = hypertree_ml_degree(oct, {{2, 3, 4}}, config(7), 3);
  CHECK(m1.count == 1);
  CHECK(m1.stable);
  auto c = hypertree_constraints(oct);
  CHECK(c.conserve);
  CHECK(c.zero_pairs.size() == 3);
}

TEST_CASE("real data give real critical points") {
  NumSolveConfig cfg = config(3);
  auto verdict = realness_check(6, cfg, 2);
  CHECK(verdict.all_real);
  CHECK(verdict.max_imag < 1e-8);
  for (int c : verdict.counts) CHECK(c == 6);
}
