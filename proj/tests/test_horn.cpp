#include <doctest.h>

#include "golden.hpp"
#include "minkin/amplitude/two_tree_amplitude.hpp"
#include "minkin/combinat/text_format.hpp"
#include "minkin/error.hpp"
#include "minkin/horn/horn.hpp"
#include "minkin/moduli/potential.hpp"

using namespace minkin;

TEST_CASE("Horn matrices match the displayed n = 6 matrices") {
  for (const char* name : {"horn_T1.json", "horn_T2.json"}) {
    auto g = golden::json_file(name);
    TwoTree t = parse_tree_spec(g["tree"].get<std::string>());
    HornPair hp = horn_matrix(t);
    std::vector<std::string> cols;
    for (Pair c : hp.columns) cols.push_back(pair_label(c));
    CHECK(cols == g["columns"].get<std::vector<std::string>>());
    auto rows = g["H"].get<std::vector<std::vector<int>>>();
    REQUIRE(hp.H.rows() == rows.size());
    REQUIRE(hp.H.cols() == rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < rows[r].size(); ++c) CHECK(hp.H(r, c) == rows[r][c]);
    CHECK(hp.lambda == g["signs"].get<std::vector<int>>());
  }
}

TEST_CASE("Horn matrix shape and sums for all small 2-trees") {
  for (int n = 4; n <= 8; ++n)
    for (const auto& t : enumerate_two_trees(n)) {
      HornPair hp = horn_matrix(t);
      REQUIRE(hp.H.rows() == static_cast<std::size_t>(3 * n - 9));
      REQUIRE(hp.H.cols() == static_cast<std::size_t>(2 * n - 6));
      for (std::size_t c = 0; c < hp.H.cols(); ++c) {
        int col = 0;
        for (std::size_t r = 0; r < hp.H.rows(); ++r) col += hp.H(r, c);
        REQUIRE(col == 0);
        for (std::size_t b = 0; b < hp.H.rows(); b += 3) REQUIRE(hp.H(b, c) + hp.H(b + 1, c) + hp.H(b + 2, c) == 0);
      }
    }
}

TEST_CASE("critical points match the displayed rational functions") {
  for (auto [tree, file] : {std::pair{"123,234,235", "critical_T2.txt"}, std::pair{"123,134,145", "critical_T1.txt"}}) {
    auto sym = critical_point_symbolic(parse_tree_spec(tree));
    auto eqs = golden::equations(file);
    CHECK(eqs.size() == sym.p_hat.size());
    for (const auto& [lhs, rhs] : eqs) {
      Pair e = parse_pair_label(lhs.substr(1));
      CHECK(sym.p_hat.at(e).to_string() == parse_factored(rhs).to_string());
      CHECK(sym.p_hat_horn.at(e) == sym.p_hat.at(e));
    }
  }
  auto sym = critical_point_symbolic(parse_tree_spec("123,134,145"));
  auto eqs = golden::equations("xhat_T1.txt");
  REQUIRE(eqs.size() == sym.x_hat.size());
  for (std::size_t k = 0; k < eqs.size(); ++k) CHECK(sym.x_hat[k].to_string() == parse_factored(eqs[k].second).to_string());
}

TEST_CASE("brackets") {
  TwoTree t = parse_tree_spec("123,134,145");
  CHECK(bracket(t, {1, 3}).to_string() == "s13 + s14 + s15 + s34 + s45");
  CHECK(bracket(t, {4, 5}).to_string() == "s45");
  CHECK_THROWS_AS(bracket(t, {1, 2}), Error);
  CHECK_THROWS_AS(bracket(t, {2, 5}), Error);
}

TEST_CASE("the Horn point is a critical point, exactly") {
  for (int n = 4; n <= 7; ++n) {
    auto trees = enumerate_two_trees(n);
    for (std::size_t k = 0; k < trees.size(); ++k) {
      const TwoTree& t = trees[k];
      MandelstamPoint s = random_tree_point(t, 100 * n + k);
      HornReport rep = verify_horn(t, s);
      INFO(t.to_string(), " ", rep.detail);
      REQUIRE(rep.ok());
      auto cp = critical_point(t, s);
      auto support = t.support();
      for (const auto& g : potential_gradient(support, s, cp.x_hat)) REQUIRE(g == 0);
      TriangleStats st = tree_stats(t);
      for (const auto& tri : st.triangles) {
        BigRational lhs = bracket(st, tri.child_i()).evaluate(s.values()) / cp.p_hat.at(tri.child_i()) +
                          bracket(st, tri.child_j()).evaluate(s.values()) / cp.p_hat.at(tri.child_j());
        REQUIRE(lhs == 0);
      }
    }
  }
}

TEST_CASE("degenerate s is reported") {
  TwoTree t = parse_tree_spec("123,134,145");
  MandelstamPoint s(6);
  s.set({1, 3}, 1);
  s.set({2, 3}, -1);
  s.set({1, 4}, 2);
  s.set({3, 4}, 3);
  s.set({1, 5}, 4);
  s.set({4, 5}, -4);  // [s15] + [s45] = 0
  CHECK_THROWS_AS(critical_point(t, s), Error);
  CHECK(verify_horn(t, s).degenerate);
}

TEST_CASE("Horn pairs serialize with labeled rows and columns") {
  auto j = to_json(horn_matrix(parse_tree_spec("123,234,235")));
  CHECK(j["columns"][2] == "24");
  CHECK(j["rows"][0] == "123:13");
  CHECK(j["H"].size() == 9);
}
