#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "golden.hpp"
#include "minkin/cli/dispatch.hpp"
#include "minkin/combinat/text_format.hpp"
#include "minkin/exact/factored.hpp"
#include "minkin/kinematics/mandelstam.hpp"
#include "minkin/numsolve/solver.hpp"

using namespace minkin;
using nlohmann::json;

namespace {

cli::CommandResult run(std::vector<std::string> args) { return cli::dispatch(args); }

json run_json(std::vector<std::string> args) {
  auto r = run(std::move(args));
  REQUIRE(r.exit_code == 0);
  return json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = "cli_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("twotree enumerate") {
  auto j = run_json({"twotree", "enumerate", "--n", "6", "--iso"});
  CHECK(j["labeled"] == 15);
  CHECK(j["classes"] == 2);
  for (const auto& rep : j["representatives"]) CHECK_NOTHROW(parse_tree_spec(rep.get<std::string>()));
  auto t = run({"--format", "text", "twotree", "enumerate", "--n", "7"});
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("105 labeled") != std::string::npos);
}

TEST_CASE("twotree critical prints the displayed formulas") {
  auto j = run_json({"twotree", "critical", "--tree", "123,134,145", "--symbolic"});
  auto eqs = golden::equations("xhat_T1.txt");
  REQUIRE(j["x_hat"].size() == eqs.size());
  for (std::size_t k = 0; k < eqs.size(); ++k) CHECK(j["x_hat"][k] == parse_factored(eqs[k].second).to_string());
  // Edge sets are accepted as well.
  CHECK(run_json({"twotree", "critical", "--tree", "12,13,23,14,34,15,45", "--symbolic"}) == j);
}

TEST_CASE("twotree critical at a given point") {
  MandelstamPoint s(6);
  int v = 2;
  for (Pair e : parse_tree_spec("123,234,235").support()) s.set(e, v++);
  auto path = temp_file("s.json", to_json(s).dump());
  auto j = run_json({"twotree", "critical", "--tree", "123,234,235", "--s", path});
  CHECK(j["p_hat_value"]["13"] == "2/27");
  CHECK(j["x_hat_value"].size() == 3);
  std::remove(path.c_str());
}

TEST_CASE("twotree horn and amplitude") {
  auto h = run_json({"twotree", "horn", "--tree", "123,134,145"});
  auto g = golden::json_file("horn_T1.json");
  CHECK(h["H"] == g["H"]);
  CHECK(h["lambda"] == g["signs"]);
  CHECK(two_tree_from_json(h["tree"]).to_string() == "123,134,145");
  auto a = run_json({"twotree", "amplitude", "--tree", "123,234,235", "--check", "--seed", "3"});
  CHECK(a["check"]["agree"] == true);
  CHECK(a["convention"] == "negated_hessian");
  CHECK(parse_factored(a["amplitude"].get<std::string>()).to_string() == a["amplitude"]);
}

TEST_CASE("hypertree commands") {
  auto c = run_json({"hypertree", "check", "--triples", "123,345,156,246", "--n", "6"});
  CHECK(c["is_hypertree"] == true);
  CHECK(c["is_irreducible"] == true);
  auto bad = run_json({"hypertree", "check", "--triples", "123,134,145,126", "--n", "6"});
  CHECK(bad["is_hypertree"] == false);
  CHECK(bad["failing_axiom"] == "a");
  auto d = run_json({"hypertree", "delta", "--triples", "123,345,156,246", "--n", "6"});
  CHECK(hypertree_from_json(d["hypertree"]).triples().size() == 4);
  auto m = run_json({"hypertree", "mldeg", "--triples", "123,345,156,246", "--n", "6", "--seed", "7"});
  CHECK(m["count"] == 2);
  CHECK(m["stable"] == true);
  auto m1 = run_json({"hypertree", "mldeg", "--triples", "123,345,156,246", "--n", "6", "--zero-pole", "234", "--seed", "7"});
  CHECK(m1["count"] == 1);
}

TEST_CASE("hypertree amplitude from a file") {
  KinematicConstraints c{6, true, {{1, 4}, {2, 5}, {3, 6}}, {{2, 3, 4}}};
  MandelstamPoint s = sample_subspace(c, 5, pair_forms({{1, 2}, {1, 3}, {2, 6}, {3, 5}, {4, 5}, {4, 6}}));
  auto path = temp_file("oct.json", to_json(s).dump());
  auto a = run_json({"hypertree", "amplitude", "--triples", "123,345,156,246", "--n", "6", "--s", path, "--seed", "2", "--restrict"});
  CHECK(a["count"] == 1);
  double expected = parse_factored(golden::lines("octahedron_s234.txt")[0]).evaluate(s.values()).get_d();
  CHECK(a["re"].get<double>() == doctest::Approx(expected).epsilon(1e-8));
  std::remove(path.c_str());
}

TEST_CASE("cegm36 and verify") {
  auto c = run_json({"cegm36", "solve", "--restricted", "--seed", "1"});
  CHECK(c["count"] == 1);
  CHECK(critical_point_set_from_json(c).count() == 1);
  for (std::string suite : {"counts", "horn", "amplitude", "hessian"}) {
    auto v = run_json({"verify", "--suite", suite, "--n", "6", "--trials", "2", "--seed", "4"});
    CHECK(v["failures"] == 0);
    CHECK(v["checks"] > 0);
  }
}

TEST_CASE("same seed gives byte-identical output") {
  std::vector<std::string> args{"cegm36", "solve", "--seed", "11"};
  auto a = run(args), b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["count"] == 26);
}

TEST_CASE("usage and domain errors") {
  auto none = run({});
  CHECK(none.exit_code == 2);
  CHECK(none.err.find("Usage") != std::string::npos);
  CHECK(run({"twotree", "enumerate"}).exit_code == 2);
  CHECK(run({"twotree", "enumerate", "--n", "6", "--bogus"}).exit_code == 2);
  CHECK(run({"verify", "--suite", "nope", "--n", "5"}).exit_code == 2);
  CHECK(run({"--format", "xml", "twotree", "enumerate", "--n", "5"}).exit_code == 2);
  auto noseed = run({"cegm36", "solve"});
  CHECK(noseed.exit_code == 2);
  CHECK(noseed.err.find("--seed") != std::string::npos);
  CHECK(run({"--format", "text", "cegm36", "solve", "--restricted"}).exit_code == 0);

  auto wrong = run({"hypertree", "delta", "--triples", "123,345", "--n", "6"});
  CHECK(wrong.exit_code == 1);
  CHECK(json::parse(wrong.out)["error"] == "WRONG_TRIPLE_COUNT");
  auto range = run({"twotree", "enumerate", "--n", "20"});
  CHECK(range.exit_code == 1);
  CHECK(json::parse(range.out)["error"] == "N_OUT_OF_RANGE");
  auto tree = run({"twotree", "horn", "--tree", "12,34"});
  CHECK(tree.exit_code == 1);
  CHECK(run({"--help"}).exit_code == 0);
}
