#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

#include "minkin/exact/factored.hpp"
#include "minkin/exact/linalg.hpp"
#include "minkin/exact/linear_form.hpp"
#include "minkin/exact/rational.hpp"
#include "minkin/pair.hpp"

namespace minkin {

// Symmetric exact assignment s_ij on [n] with s_ii = 0.
class MandelstamPoint {
 public:
  MandelstamPoint() = default;
  explicit MandelstamPoint(int n);

  int n() const { return n_; }
  BigRational get(int i, int j) const;
  BigRational operator()(Pair p) const { return get(p.i, p.j); }
  void set(int i, int j, const BigRational& v);
  void set(Pair p, const BigRational& v) { set(p.i, p.j, v); }

  bool conserves_momentum() const { return conserves_; }
  void set_conserves(bool c) { conserves_ = c; }
  const std::vector<Pair>& zero_pairs() const { return zero_pairs_; }
  const std::vector<std::vector<int>>& zero_poles() const { return zero_poles_; }
  void declare_zero_pairs(std::vector<Pair> p) { zero_pairs_ = std::move(p); }
  void declare_zero_poles(std::vector<std::vector<int>> p) { zero_poles_ = std::move(p); }

  // Row sums vanish (when flagged) and every declared zero is exactly zero.
  bool satisfies_constraints() const;
  bool row_sums_zero() const;

  SValues values() const;
  SValuesNumeric numeric_values() const;

  bool operator==(const MandelstamPoint&) const = default;

 private:
  std::size_t index(int i, int j) const;
  int n_ = 0;
  std::vector<BigRational> values_;  // upper triangle, row-major
  bool conserves_ = false;
  std::vector<Pair> zero_pairs_;
  std::vector<std::vector<int>> zero_poles_;
};

std::vector<Pair> all_pairs(int n);
// S = {(i,j): 1 <= i < j <= n-1} minus (1,2).
std::vector<Pair> basis_S(int n);

// Unique conserving extension of values given on S (BAD_BASIS_KEYS otherwise).
MandelstamPoint complete_conservation(int n, const std::map<Pair, BigRational>& basis_values);

// Symbolic version: each s_ij as an integer linear form in the S variables.
std::map<Pair, LinearForm> conservation_forms(int n);

BigRational multi_pole(const MandelstamPoint& s, const std::vector<int>& subset);
LinearForm multi_pole_form(const std::vector<int>& subset);

struct KinematicConstraints {
  int n = 0;
  bool conserve = false;
  std::vector<Pair> zero_pairs;
  std::vector<std::vector<int>> zero_poles;
};

// One row per conservation equation, zero pair and zero pole; columns follow
// all_pairs(n).
RationalMatrix constraint_matrix(const KinematicConstraints& c);
std::vector<std::vector<BigInt>> subspace_basis(const KinematicConstraints& c);

// Random integer point of the constrained subspace, resampled until every
// form in `nonvanishing` is nonzero. INCONSISTENT_CONSTRAINTS for a trivial
// subspace, SAMPLING_EXHAUSTED after 1000 rejections.
MandelstamPoint sample_subspace(const KinematicConstraints& c, std::uint64_t seed,
                                const std::vector<LinearForm>& nonvanishing = {});

std::vector<LinearForm> pair_forms(const std::vector<Pair>& pairs);

nlohmann::json to_json(const MandelstamPoint& s);
MandelstamPoint mandelstam_from_json(const nlohmann::json& j);

}  // namespace minkin
