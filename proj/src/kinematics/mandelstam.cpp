#include "minkin/kinematics/mandelstam.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "minkin/error.hpp"

namespace minkin {

namespace {

constexpr int kMaxSamplingAttempts = 1000;
constexpr int kSampleRange = 999;

std::size_t pair_column(int n, Pair p) {
  // Position of p in all_pairs(n).
  std::size_t i = static_cast<std::size_t>(p.i - 1), j = static_cast<std::size_t>(p.j - 1);
  std::size_t nn = static_cast<std::size_t>(n);
  return i * nn - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

MandelstamPoint::MandelstamPoint(int n) : n_(n), values_(static_cast<std::size_t>(n * (n - 1) / 2), 0) {
  if (n < 3) throw Error(ErrorCode::NOutOfRange, "Mandelstam points need n >= 3");
}

std::size_t MandelstamPoint::index(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) throw Error(ErrorCode::BadIndex, "s index outside [n]");
  if (i > j) std::swap(i, j);
  return pair_column(n_, {i, j});
}

BigRational MandelstamPoint::get(int i, int j) const {
  if (i == j) return 0;
  return values_[index(i, j)];
}

void MandelstamPoint::set(int i, int j, const BigRational& v) {
  if (i == j) throw Error(ErrorCode::BadIndex, "s_ii is fixed to zero");
  values_[index(i, j)] = v;
}

bool MandelstamPoint::row_sums_zero() const {
  for (int i = 1; i <= n_; ++i) {
    BigRational r = 0;
    for (int j = 1; j <= n_; ++j) r += get(i, j);
    if (r != 0) return false;
  }
  return true;
}

bool MandelstamPoint::satisfies_constraints() const {
  if (conserves_ && !row_sums_zero()) return false;
  for (Pair p : zero_pairs_)
    if (get(p.i, p.j) != 0) return false;
  for (const auto& pole : zero_poles_)
    if (multi_pole(*this, pole) != 0) return false;
  return true;
}

// The returned callables own a copy, so they outlive temporaries.
SValues MandelstamPoint::values() const {
  return [copy = *this](Pair p) { return copy.get(p.i, p.j); };
}

SValuesNumeric MandelstamPoint::numeric_values() const {
  return [copy = *this](Pair p) { return std::complex<double>(copy.get(p.i, p.j).get_d(), 0.0); };
}

std::vector<Pair> all_pairs(int n) {
  std::vector<Pair> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

std::vector<Pair> basis_S(int n) {
  std::vector<Pair> out;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j)
      if (!(i == 1 && j == 2)) out.push_back({i, j});
  return out;
}

MandelstamPoint complete_conservation(int n, const std::map<Pair, BigRational>& basis_values) {
  auto S = basis_S(n);
  if (basis_values.size() != S.size())
    throw Error(ErrorCode::BadBasisKeys, "expected exactly the " + std::to_string(S.size()) + " pairs of S");
  for (Pair p : S)
    if (!basis_values.count(p)) throw Error(ErrorCode::BadBasisKeys, "missing basis key " + pair_label(p));
  MandelstamPoint s(n);
  for (const auto& [p, v] : basis_values) s.set(p, v);
  // Unknowns: s_12, s_1n, ..., s_{n-1,n}. Row i of momentum conservation:
  // Σ_j s_ij = 0.
  std::vector<Pair> unknowns{{1, 2}};
  for (int i = 1; i <= n - 1; ++i) unknowns.push_back({i, n});
  RationalMatrix a(static_cast<std::size_t>(n), unknowns.size(), 0);
  std::vector<BigRational> rhs(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Pair p = make_pair_sorted(i, j);
      auto it = std::find(unknowns.begin(), unknowns.end(), p);
      if (it != unknowns.end())
        a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(it - unknowns.begin())) += 1;
      else
        rhs[static_cast<std::size_t>(i - 1)] -= s.get(i, j);
    }
  }
  auto x = solve_rational(a, rhs);
  if (!x) throw Error(ErrorCode::InconsistentConstraints, "conservation solve failed");
  for (std::size_t k = 0; k < unknowns.size(); ++k) s.set(unknowns[k], (*x)[k]);
  s.set_conserves(true);
  return s;
}

std::map<Pair, LinearForm> conservation_forms(int n) {
  // Linearity: complete with unit vectors and read off coefficients.
  auto S = basis_S(n);
  std::map<Pair, LinearForm> out;
  for (Pair p : S) out[p] = LinearForm::variable(p);
  for (Pair basis : S) {
    std::map<Pair, BigRational> unit;
    for (Pair q : S) unit[q] = q == basis ? 1 : 0;
    MandelstamPoint s = complete_conservation(n, unit);
    for (Pair p : all_pairs(n)) {
      if (std::find(S.begin(), S.end(), p) != S.end()) continue;
      BigRational v = s(p);
      out[p].add(basis, v.get_num().get_si());
    }
  }
  return out;
}

BigRational multi_pole(const MandelstamPoint& s, const std::vector<int>& subset) {
  BigRational r = 0;
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b) r += s.get(subset[a], subset[b]);
  return r;
}

LinearForm multi_pole_form(const std::vector<int>& subset) {
  LinearForm f;
  for (std::size_t a = 0; a < subset.size(); ++a)
    for (std::size_t b = a + 1; b < subset.size(); ++b) f.add(make_pair_sorted(subset[a], subset[b]), 1);
  return f;
}

RationalMatrix constraint_matrix(const KinematicConstraints& c) {
  const auto pairs = all_pairs(c.n);
  std::vector<std::vector<BigRational>> rows;
  if (c.conserve) {
    for (int i = 1; i <= c.n; ++i) {
      std::vector<BigRational> r(pairs.size(), 0);
      for (int j = 1; j <= c.n; ++j)
        if (j != i) r[pair_column(c.n, make_pair_sorted(i, j))] = 1;
      rows.push_back(r);
    }
  }
  for (Pair p : c.zero_pairs) {
    if (p.i < 1 || p.j > c.n || p.i >= p.j) throw Error(ErrorCode::BadIndex, "zero pair outside [n]");
    std::vector<BigRational> r(pairs.size(), 0);
    r[pair_column(c.n, p)] = 1;
    rows.push_back(r);
  }
  for (const auto& pole : c.zero_poles) {
    std::vector<BigRational> r(pairs.size(), 0);
    const LinearForm form = multi_pole_form(pole);
    for (const auto& [p, k] : form.coefficients()) {
      if (p.i < 1 || p.j > c.n) throw Error(ErrorCode::BadIndex, "zero pole outside [n]");
      r[pair_column(c.n, p)] += k;
    }
    rows.push_back(r);
  }
  RationalMatrix m(rows.size(), pairs.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t col = 0; col < pairs.size(); ++col) m(r, col) = rows[r][col];
  return m;
}

std::vector<std::vector<BigInt>> subspace_basis(const KinematicConstraints& c) {
  RationalMatrix m = constraint_matrix(c);
  if (m.rows() == 0) {
    std::vector<std::vector<BigInt>> id;
    const std::size_t dim = static_cast<std::size_t>(c.n * (c.n - 1) / 2);
    for (std::size_t k = 0; k < dim; ++k) {
      std::vector<BigInt> v(dim, 0);
      v[k] = 1;
      id.push_back(v);
    }
    return id;
  }
  return nullspace_rational(m);
}

MandelstamPoint sample_subspace(const KinematicConstraints& c, std::uint64_t seed,
                                const std::vector<LinearForm>& nonvanishing) {
  auto basis = subspace_basis(c);
  if (basis.empty()) throw Error(ErrorCode::InconsistentConstraints, "constraints leave only the zero point");
  const auto pairs = all_pairs(c.n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-kSampleRange, kSampleRange);
  for (int attempt = 0; attempt < kMaxSamplingAttempts; ++attempt) {
    std::vector<BigInt> v(pairs.size(), 0);
    for (const auto& b : basis) {
      BigInt k = coef(rng);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += k * b[i];
    }
    MandelstamPoint s(c.n);
    for (std::size_t i = 0; i < pairs.size(); ++i) s.set(pairs[i], BigRational(v[i]));
    s.set_conserves(c.conserve);
    s.declare_zero_pairs(c.zero_pairs);
    s.declare_zero_poles(c.zero_poles);
    bool ok = std::none_of(nonvanishing.begin(), nonvanishing.end(),
                           [&](const LinearForm& f) { return f.evaluate(s.values()) == 0; });
    if (ok) return s;
  }
  throw Error(ErrorCode::SamplingExhausted, "no generic sample after 1000 draws");
}

std::vector<LinearForm> pair_forms(const std::vector<Pair>& pairs) {
  std::vector<LinearForm> out;
  for (Pair p : pairs) out.push_back(LinearForm::variable(p));
  return out;
}

nlohmann::json to_json(const MandelstamPoint& s) {
  nlohmann::json values = nlohmann::json::object();
  for (Pair p : all_pairs(s.n())) {
    BigRational v = s(p);
    if (v != 0) values[pair_label(p)] = v.get_str();
  }
  nlohmann::json j = {{"n", s.n()}, {"values", values}, {"conserves", s.conserves_momentum()}};
  if (!s.zero_pairs().empty()) {
    nlohmann::json zp = nlohmann::json::array();
    for (Pair p : s.zero_pairs()) zp.push_back(pair_label(p));
    j["zero_pairs"] = zp;
  }
  if (!s.zero_poles().empty()) j["zero_poles"] = s.zero_poles();
  return j;
}

MandelstamPoint mandelstam_from_json(const nlohmann::json& j) {
  try {
    MandelstamPoint s(j.at("n").get<int>());
    for (const auto& [key, val] : j.at("values").items()) {
      Pair p = parse_pair_label(key);
      std::string text = val.is_string() ? val.get<std::string>() : val.dump();
      s.set(p, parse_rational(text));
    }
    s.set_conserves(j.value("conserves", false));
    if (j.contains("zero_pairs")) {
      std::vector<Pair> zp;
      for (const auto& z : j["zero_pairs"]) zp.push_back(parse_pair_label(z.get<std::string>()));
      s.declare_zero_pairs(zp);
    }
    if (j.contains("zero_poles")) s.declare_zero_poles(j["zero_poles"].get<std::vector<std::vector<int>>>());
    if (!s.satisfies_constraints())
      throw Error(ErrorCode::InconsistentConstraints, "values violate the declared constraints");
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace minkin
