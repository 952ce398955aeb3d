#include <doctest.h>

#include "golden.hpp"
#include "minkin/error.hpp"
#include "minkin/exact/factored.hpp"
#include "minkin/kinematics/mandelstam.hpp"

using namespace minkin;

TEST_CASE("basis S and conservation completion") {
  CHECK(basis_S(6).size() == 9);
  CHECK(all_pairs(6).size() == 15);
  std::map<Pair, BigRational> b;
  int v = 1;
  for (Pair p : basis_S(6)) b[p] = v++ * (v % 2 ? 1 : -1);
  MandelstamPoint s = complete_conservation(6, b);
  CHECK(s.row_sums_zero());
  CHECK(s.conserves_momentum());
  for (auto& [p, x] : b) CHECK(s(p) == x);

  // The displayed substitutions are the completion.
  for (const auto& [lhs, rhs] : golden::equations("m6_basis.txt")) {
    Pair p = parse_pair_label(lhs.substr(1));
    CHECK(parse_factored(rhs).evaluate(s.values()) == s(p));
  }
  auto forms = conservation_forms(6);
  for (Pair p : all_pairs(6)) CHECK(forms.at(p).evaluate(s.values()) == s(p));

  b.erase({1, 3});
  CHECK_THROWS_AS(complete_conservation(6, b), Error);
}

TEST_CASE("multi-particle poles") {
  MandelstamPoint s(6);
  s.set({2, 3}, 1);
  s.set({2, 4}, 2);
  s.set({3, 4}, 4);
  s.set({1, 2}, 8);
  CHECK(multi_pole(s, {2, 3, 4}) == 7);
  CHECK(multi_pole_form({2, 3, 4}).to_string() == "s23 + s24 + s34");
}

TEST_CASE("subspace sampling honours every constraint") {
  KinematicConstraints c{6, true, {{1, 4}, {2, 5}, {3, 6}}, {{2, 3, 4}}};
  auto basis = subspace_basis(c);
  CHECK(basis.size() == 5);
  auto nonzero = pair_forms({{1, 2}, {1, 3}, {2, 6}, {3, 5}, {4, 5}, {4, 6}});
  MandelstamPoint a = sample_subspace(c, 17, nonzero), b = sample_subspace(c, 17, nonzero);
  CHECK(a == b);
  CHECK(a.satisfies_constraints());
  CHECK(a.row_sums_zero());
  CHECK(multi_pole(a, {2, 3, 4}) == 0);
  CHECK(a(Pair{1, 4}) == 0);
  for (const auto& f : nonzero) CHECK(f.evaluate(a.values()) != 0);
  CHECK_FALSE(sample_subspace(c, 18, nonzero) == a);

  KinematicConstraints everything{4, true, {{1, 2}, {1, 3}, {2, 3}}, {}};
  CHECK_THROWS_AS(sample_subspace(everything, 1), Error);
  KinematicConstraints forced{4, true, {{1, 2}}, {}};
  // s34 = s12 = 0 under conservation, so s34 can never be nonzero.
  CHECK_THROWS_AS(sample_subspace(forced, 1, pair_forms({{3, 4}})), Error);
}

TEST_CASE("Mandelstam points round trip through JSON") {
  KinematicConstraints c{7, true, {{1, 3}}, {{4, 5, 6}}};
  MandelstamPoint s = sample_subspace(c, 3);
  MandelstamPoint back = mandelstam_from_json(to_json(s));
  CHECK(back == s);
  auto j = to_json(s);
  j["values"]["13"] = "1/2";
  CHECK_THROWS_AS(mandelstam_from_json(j), Error);
  j["values"]["13"] = "x";
  CHECK_THROWS_AS(mandelstam_from_json(j), Error);
}
