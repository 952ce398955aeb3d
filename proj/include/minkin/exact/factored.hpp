#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "minkin/exact/linear_form.hpp"
#include "minkin/exact/rational.hpp"
#include "minkin/exact/sparse_poly.hpp"

namespace minkin {

// c * Π form_k^{e_k} with integer linear forms in the s-variables.
//
// Canonical form: every form has content 1 and a positive first coefficient
// (scalars are absorbed into c), forms are distinct, sorted, with nonzero
// exponents. Two canonical values are equal as rational functions iff they
// are equal as objects (forms are irreducible and pairwise non-associate).
class FactoredRational {
 public:
  using Factor = std::pair<LinearForm, int>;

  FactoredRational() = default;  // the constant 1
  explicit FactoredRational(const BigRational& c);
  FactoredRational(const LinearForm& form, int exponent = 1);
  FactoredRational(const BigRational& c, std::vector<Factor> factors);

  const BigRational& coefficient() const { return coeff_; }
  const std::vector<Factor>& factors() const { return factors_; }
  int sign() const { return sgn(coeff_); }
  bool is_zero() const { return coeff_ == 0; }
  int degree() const;  // total degree of numerator minus denominator

  FactoredRational& operator*=(const FactoredRational& o);
  FactoredRational& operator/=(const FactoredRational& o);
  friend FactoredRational operator*(FactoredRational a, const FactoredRational& b) { return a *= b; }
  friend FactoredRational operator/(FactoredRational a, const FactoredRational& b) { return a /= b; }
  FactoredRational operator-() const;
  FactoredRational pow(int e) const;
  FactoredRational reciprocal() const;

  bool operator==(const FactoredRational& o) const = default;

  // DegenerateS when a denominator form vanishes at s.
  BigRational evaluate(const SValues& s) const;
  std::complex<double> evaluate(const SValuesNumeric& s) const;

  // Numerator and denominator expanded over the given s-variables.
  std::pair<SparsePoly, SparsePoly> expand(const std::vector<Pair>& var_order) const;
  std::vector<Pair> variables() const;  // sorted union of s-labels in use

  // Golden-file rendering: sign, optional |c| when it is not 1, then
  // "(form)^e" factors in canonical order joined by '*'; "^1" omitted.
  std::string to_string() const;

 private:
  void canonicalize();

  BigRational coeff_ = 1;
  std::vector<Factor> factors_;
};

// Sum of factored terms; used for chart coordinates x̂ that accumulate
// several p̂ values.
class FactoredSum {
 public:
  FactoredSum() = default;
  explicit FactoredSum(FactoredRational term) { add(std::move(term)); }
  void add(FactoredRational term);
  const std::vector<FactoredRational>& terms() const { return terms_; }

  BigRational evaluate(const SValues& s) const;
  std::complex<double> evaluate(const SValuesNumeric& s) const;

  // One term renders as FactoredRational::to_string; several terms render as
  // "(expanded numerator)*(den form)^-e*..." over the common denominator.
  std::string to_string() const;
  // Common-denominator representation (num, d): the sum equals num * d, where
  // d carries the denominator forms with negative exponents.
  std::pair<SparsePoly, FactoredRational> combine(const std::vector<Pair>& var_order) const;

 private:
  std::vector<FactoredRational> terms_;
};

// Parses the canonical format and displayed fractions such as
//   "-(s23 + s24)*s24/((s13 + s23)*(s24 + s34))"  or  "s13/(s13+s23)".
// Sums are allowed only between linear terms. Throws ParseError.
FactoredRational parse_factored(std::string_view text);

std::vector<std::string> s_variable_names(const std::vector<Pair>& pairs);

}  // namespace minkin
