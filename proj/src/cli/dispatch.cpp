#include "minkin/cli/dispatch.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "minkin/amplitude/onshell.hpp"
#include "minkin/amplitude/two_tree_amplitude.hpp"
#include "minkin/combinat/iso.hpp"
#include "minkin/combinat/text_format.hpp"
#include "minkin/error.hpp"
#include "minkin/horn/horn.hpp"
#include "minkin/moduli/potential.hpp"
#include "minkin/numsolve/scattering.hpp"

namespace minkin::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "json";
  std::uint64_t seed = 0;
  bool seed_given = false;
  int n = 0;
  int trials = 3;
  std::string tree, triples, s_file, suite;
  std::vector<std::string> zero_poles;
  bool iso = false, symbolic = false, check = false, restricted = false, restrict_support = false;
};

bool text(const Options& o) { return o.format == "text"; }

void need_seed(const Options& o) {
  if (!o.seed_given && !text(o)) throw UsageError("--seed is required for randomized commands in json mode");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MandelstamPoint load_point(const std::string& path) {
  try {
    return mandelstam_from_json(json::parse(read_file(path)));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Hypertree load_hypertree(const Options& o) {
  auto t = parse_triples(o.triples);
  int n = o.n;
  if (n == 0)
    for (const auto& tr : t) n = std::max(n, tr[2]);
  return Hypertree(n, t);
}

std::vector<std::vector<int>> parse_poles(const std::vector<std::string>& specs) {
  std::vector<std::vector<int>> out;
  for (const auto& s : specs) {
    std::vector<int> v;
    if (s.find('.') != std::string::npos) {
      std::stringstream in(s);
      std::string part;
      while (std::getline(in, part, '.')) v.push_back(std::stoi(part));
    } else {
      for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw UsageError("bad --zero-pole " + s);
        v.push_back(c - '0');
      }
    }
    if (v.size() < 2) throw UsageError("a pole needs at least two labels");
    out.push_back(v);
  }
  return out;
}

std::string complex_text(std::complex<double> z) {
  std::ostringstream o;
  o.precision(12);
  o << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return o.str();
}

std::string double_factorial_text(int n) {
  long long r = 1;
  for (int k = 1; k <= 2 * n - 7; k += 2) r *= k;
  return std::to_string(r);
}

// Known unlabeled counts for n = 4..9.
int known_iso_count(int n) {
  static const int counts[] = {1, 1, 2, 5, 12, 39};
  return n >= 4 && n <= 9 ? counts[n - 4] : -1;
}

json expanded(const FactoredRational& f) {
  auto vars = f.variables();
  auto [num, den] = f.expand(vars);
  return {{"numerator", num.to_string()}, {"denominator", den.to_string()}};
}

// ---- subcommands --------------------------------------------------------

CommandResult twotree_enumerate(const Options& o) {
  auto trees = enumerate_two_trees(o.n);
  json j = {{"n", o.n}, {"labeled", trees.size()}};
  std::ostringstream t;
  t << "n=" << o.n << ": " << trees.size() << " labeled 2-trees\n";
  if (o.iso) {
    auto cls = iso_classes(trees);
    json reps = json::array();
    for (const auto& r : cls.representatives) reps.push_back(r.to_string());
    j["classes"] = cls.representatives.size();
    j["class_sizes"] = cls.class_sizes;
    j["representatives"] = reps;
    t << cls.representatives.size() << " isomorphism classes\n";
    for (std::size_t k = 0; k < cls.representatives.size(); ++k)
      t << "  " << cls.representatives[k].to_string() << "  (" << cls.class_sizes[k] << " labeled)\n";
  }
  return {0, text(o) ? t.str() : j.dump(2) + "\n", ""};
}

CommandResult twotree_horn(const Options& o) {
  TwoTree tr = parse_tree_spec(o.tree);
  HornPair hp = horn_matrix(tr);
  json j = to_json(hp);
  j["tree"] = to_json(tr);
  std::ostringstream t;
  t << "columns:";
  for (Pair c : hp.columns) t << " " << pair_label(c);
  t << "\n";
  for (std::size_t r = 0; r < hp.H.rows(); ++r) {
    t << hp.row_labels[r] << "\t";
    for (std::size_t c = 0; c < hp.H.cols(); ++c) t << (c ? " " : "") << hp.H(r, c);
    t << "\n";
  }
  t << "lambda:";
  for (int l : hp.lambda) t << " " << l;
  t << "\n";
  return {0, text(o) ? t.str() : j.dump(2) + "\n", ""};
}

CommandResult twotree_critical(const Options& o) {
  TwoTree tr = parse_tree_spec(o.tree);
  json j = {{"tree", to_json(tr)}};
  std::ostringstream t;
  if (o.symbolic || o.s_file.empty()) {
    auto sym = critical_point_symbolic(tr);
    json p = json::object(), x = json::array();
    for (const auto& [e, f] : sym.p_hat) {
      p[pair_label(e)] = f.to_string();
      t << "p" << pair_label(e) << " = " << f.to_string() << "\n";
    }
    for (std::size_t k = 0; k < sym.x_hat.size(); ++k) {
      x.push_back(sym.x_hat[k].to_string());
      t << "x" << k + 1 << " = " << sym.x_hat[k].to_string() << "\n";
    }
    j["p_hat"] = p;
    j["x_hat"] = x;
  }
  if (!o.s_file.empty()) {
    MandelstamPoint s = load_point(o.s_file);
    auto cp = critical_point(tr, s);
    json p = json::object(), x = json::array();
    for (const auto& [e, v] : cp.p_hat) p[pair_label(e)] = v.get_str();
    for (std::size_t k = 0; k < cp.x_hat.size(); ++k) {
      x.push_back(cp.x_hat[k].get_str());
      t << "x" << k + 1 << " at s = " << cp.x_hat[k].get_str() << "\n";
    }
    j["p_hat_value"] = p;
    j["x_hat_value"] = x;
  }
  return {0, text(o) ? t.str() : j.dump(2) + "\n", ""};
}

CommandResult twotree_amplitude(const Options& o) {
  TwoTree tr = parse_tree_spec(o.tree);
  FactoredRational m = amplitude_formula(tr), h = hessian_closed_form(tr);
  json j = {{"tree", to_json(tr)},
            {"convention", kAmplitudeConvention},
            {"amplitude", m.to_string()},
            {"amplitude_expanded", expanded(m)},
            {"hessian", h.to_string()}};
  std::ostringstream t;
  t << "m_T = " << m.to_string() << "\n" << "Hess = " << h.to_string() << "\n";
  int rc = 0;
  if (o.check) {
    need_seed(o);
    AmplitudeEvaluator ev(tr);
    json draws = json::array();
    bool all = true;
    for (int k = 0; k < o.trials; ++k) {
      MandelstamPoint s = random_tree_point(tr, o.seed + static_cast<std::uint64_t>(k));
      auto v = ev.evaluate(s);
      BigRational f = m.evaluate(s.values());
      bool ok = v.amplitude == f && v.hessian_det == h.evaluate(s.values());
      all = all && ok;
      draws.push_back({{"s", to_json(s)}, {"amplitude_at", v.amplitude.get_str()}, {"formula", f.get_str()}, {"agree", ok}});
    }
    j["check"] = {{"draws", draws}, {"agree", all}};
    t << "check over " << o.trials << " draws: " << (all ? "agree" : "MISMATCH") << "\n";
    rc = all ? 0 : 1;
  }
  return {rc, text(o) ? t.str() : j.dump(2) + "\n", ""};
}

CommandResult hypertree_check(const Options& o) {
  auto triples = parse_triples(o.triples);
  auto rep = validate_hypertree(triples, o.n);
  json j = {{"n", o.n},
            {"triples", format_triples(triples)},
            {"is_hypertree", rep.is_hypertree},
            {"is_irreducible", rep.is_irreducible},
            {"failing_axiom", rep.failing_axiom},
            {"failing_witness", rep.witness ? json(*rep.witness) : json(nullptr)}};
  std::ostringstream t;
  t << "hypertree: " << (rep.is_hypertree ? "yes" : "no") << "\nirreducible: " << (rep.is_irreducible ? "yes" : "no") << "\n";
  if (rep.witness) {
    t << "witness (" << rep.failing_axiom << "):";
    for (int w : *rep.witness) t << " " << w;
    t << "\n";
  }
  return {0, text(o) ? t.str() : j.dump(2) + "\n", ""};
}

CommandResult hypertree_delta(const Options& o) {
  Hypertree h = load_hypertree(o);
  OnShellMatrix m = matrix_MT(h);
  SparsePoly d = delta(m);
  ChartRational in = integrand(m);
  json j = {{"hypertree", to_json(h)},
            {"delta", d.to_string()},
            {"integrand", {{"numerator", in.num.to_string()}, {"denominator", in.den.to_string()}}}};
  return {0, text(o) ? "Delta = " + d.to_string() + "\n" : j.dump(2) + "\n", ""};
}

NumSolveConfig config_for(const Options& o) {
  NumSolveConfig cfg;
  cfg.seed = o.seed;
  return cfg;
}

CommandResult hypertree_mldeg(const Options& o) {
  need_seed(o);
  Hypertree h = load_hypertree(o);
  auto poles = parse_poles(o.zero_poles);
  MlDegree m = hypertree_ml_degree(h, poles, config_for(o), o.trials);
  json j = {{"count", m.count}, {"stable", m.stable}, {"trial_counts", m.trial_counts}};
  std::ostringstream t;
  t << "ML degree " << m.count << (m.stable ? " (stable)" : " (UNSTABLE_COUNT)") << "\n";
  return {m.stable ? 0 : 1, text(o) ? t.str() : j.dump() + "\n", ""};
}

CommandResult hypertree_amp(const Options& o) {
  need_seed(o);
  Hypertree h = load_hypertree(o);
  MandelstamPoint s = load_point(o.s_file);
  auto a = hypertree_amplitude(h, s, config_for(o), o.restrict_support);
  json j = {{"re", a.value.real()}, {"im", a.value.imag()}, {"count", a.count}, {"stable", a.stable}, {"convention", a.convention}};
  std::ostringstream t;
  t << "m_T = " << complex_text(a.value) << " over " << a.count << " critical points\n";
  return {a.stable ? 0 : 1, text(o) ? t.str() : j.dump(2) + "\n", ""};
}

CommandResult cegm36(const Options& o) {
  need_seed(o);
  auto zeros = o.restricted ? cegm36_restricted_zeros() : std::vector<Triple>{};
  auto s3 = sample_cegm36(zeros, o.seed);
  auto set = cegm36_solve(s3, config_for(o));
  json j = to_json(set);
  json sv = json::object();
  for (const auto& [t, v] : s3) sv[format_triples({t})] = v.get_str();
  j["s3"] = sv;
  j["restricted"] = o.restricted;
  std::ostringstream t;
  t << set.count() << " critical points" << (set.stable ? " (stable)" : " (UNSTABLE_COUNT)") << "\n";
  return {set.stable ? 0 : 1, text(o) ? t.str() : j.dump(2) + "\n", ""};
}

CommandResult verify(const Options& o) {
  need_seed(o);
  json j = {{"suite", o.suite}, {"n", o.n}, {"trials", o.trials}};
  std::size_t checks = 0, failures = 0;
  if (o.suite == "counts") {
    auto trees = enumerate_two_trees(o.n);
    auto cls = iso_classes(trees);
    j["labeled"] = trees.size();
    j["classes"] = cls.representatives.size();
    checks = 2;
    failures += std::to_string(trees.size()) != double_factorial_text(o.n);
    int known = known_iso_count(o.n);
    failures += known >= 0 && static_cast<int>(cls.representatives.size()) != known;
  } else {
    auto trees = enumerate_two_trees(o.n);
    for (std::size_t ti = 0; ti < trees.size(); ++ti) {
      const TwoTree& tr = trees[ti];
      std::unique_ptr<AmplitudeEvaluator> ev;
      if (o.suite != "horn") ev = std::make_unique<AmplitudeEvaluator>(tr);
      for (int k = 0; k < o.trials; ++k) {
        MandelstamPoint s = random_tree_point(tr, o.seed + 7919 * ti + static_cast<std::uint64_t>(k));
        ++checks;
        bool ok;
        if (o.suite == "horn") {
          ok = verify_horn(tr, s).ok();
        } else if (o.suite == "amplitude") {
          ok = ev->evaluate(s).amplitude == amplitude_formula(tr).evaluate(s.values());
        } else {
          ok = ev->evaluate(s).hessian_det == hessian_closed_form(tr).evaluate(s.values());
        }
        failures += !ok;
      }
    }
  }
  j["checks"] = checks;
  j["failures"] = failures;
  std::ostringstream t;
  t << o.suite << " n=" << o.n << ": " << checks - failures << "/" << checks << " passed\n";
  return {failures ? 1 : 0, text(o) ? t.str() : j.dump(2) + "\n", ""};
}

}  // namespace

CommandResult dispatch(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Minimal kinematics on M_0,n: 2-trees, Horn uniformization, amplitudes and ML degrees", "minkin"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  auto* seed_opt = app.add_option("--seed", o.seed, "Random seed");

  std::function<CommandResult()> action;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, std::function<CommandResult()> fn) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  CLI::App* tt = app.add_subcommand("twotree", "2-tree commands");
  tt->require_subcommand(1);
  tt->fallthrough();
  auto* en = leaf(tt, "enumerate", "Enumerate labeled 2-trees", [&] { return twotree_enumerate(o); });
  en->add_option("--n", o.n, "Number of points n (tree on [n-1])")->required();
  en->add_flag("--iso", o.iso, "Group into isomorphism classes");
  auto* hn = leaf(tt, "horn", "Horn matrix and sign vector", [&] { return twotree_horn(o); });
  hn->add_option("--tree", o.tree, "Triangle triples or edge set")->required();
  auto* cr = leaf(tt, "critical", "Exact critical point", [&] { return twotree_critical(o); });
  cr->add_option("--tree", o.tree, "Triangle triples or edge set")->required();
  cr->add_option("--s", o.s_file, "Mandelstam point JSON file");
  cr->add_flag("--symbolic", o.symbolic, "Print factored formulas");
  auto* am = leaf(tt, "amplitude", "Closed-form amplitude and Hessian", [&] { return twotree_amplitude(o); });
  am->add_option("--tree", o.tree, "Triangle triples or edge set")->required();
  am->add_flag("--check", o.check, "Compare against exact evaluation at random s");
  am->add_option("--trials", o.trials, "Draws for --check");

  CLI::App* ht = app.add_subcommand("hypertree", "Hypertree commands");
  ht->require_subcommand(1);
  ht->fallthrough();
  auto triples_opts = [&](CLI::App* s) {
    s->add_option("--triples", o.triples, "Comma-separated triples")->required();
    s->add_option("--n", o.n, "Ground set size");
  };
  auto* hc = leaf(ht, "check", "Validate the hypertree axioms", [&] { return hypertree_check(o); });
  triples_opts(hc);
  hc->get_option("--n")->required();
  triples_opts(leaf(ht, "delta", "Hypertree divisor Delta(M_T)", [&] { return hypertree_delta(o); }));
  auto* ml = leaf(ht, "mldeg", "ML degree on the hypertree subspace", [&] { return hypertree_mldeg(o); });
  triples_opts(ml);
  ml->add_option("--zero-pole", o.zero_poles, "Multi-particle pole set to zero, e.g. 234");
  ml->add_option("--trials", o.trials, "Independent generic samples")->check(CLI::PositiveNumber);
  auto* ha = leaf(ht, "amplitude", "Numerical hypertree amplitude", [&] { return hypertree_amp(o); });
  triples_opts(ha);
  ha->add_option("--s", o.s_file, "Conserving Mandelstam point JSON file")->required();
  ha->add_flag("--restrict", o.restrict_support, "Require s to vanish on non-edges");

  CLI::App* cg = app.add_subcommand("cegm36", "Gr(3,6) check");
  cg->require_subcommand(1);
  cg->fallthrough();
  auto* cs = leaf(cg, "solve", "Critical points of the X(3,6) potential", [&] { return cegm36(o); });
  cs->add_flag("--restricted", o.restricted, "Use the six-zero subspace");

  auto* vf = leaf(&app, "verify", "Exact verification sweeps over all 2-trees", [&] { return verify(o); });
  vf->add_option("--suite", o.suite, "Suite")->required()->check(CLI::IsMember({"horn", "amplitude", "hessian", "counts"}));
  vf->add_option("--n", o.n, "Number of points")->required();
  vf->add_option("--trials", o.trials, "Draws per tree");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help(), ""};
  } catch (const CLI::CallForAllHelp&) {
    return {0, app.help("", CLI::AppFormatMode::All), ""};
  } catch (const CLI::ParseError& e) {
    return {2, "", std::string(e.what()) + "\n" + app.help()};
  }
  o.seed_given = seed_opt->count() > 0;
  if (!action) return {2, "", app.help()};
  try {
    return action();
  } catch (const UsageError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const Error& e) {
    json j = {{"error", e.tag()}, {"message", e.what()}};
    return {1, text(o) ? "" : j.dump() + "\n", std::string(e.what()) + "\n"};
  }
}

}  // namespace minkin::cli
