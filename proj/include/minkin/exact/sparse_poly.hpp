#pragma once

#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "minkin/exact/rational.hpp"

namespace minkin {

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed, named variable list. Terms are kept in descending lex order, so the
// first term is the leading one. Arithmetic between polynomials over
// different variable lists throws MixedVariables.
class SparsePoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, BigRational, std::greater<>>;

  SparsePoly() : vars_(std::make_shared<const std::vector<std::string>>()) {}
  explicit SparsePoly(std::vector<std::string> vars);
  SparsePoly(std::vector<std::string> vars, const BigRational& c);

  static SparsePoly constant(std::vector<std::string> vars, const BigRational& c);
  static SparsePoly variable(std::vector<std::string> vars, std::size_t index);
  // Same variable list as `like`.
  static SparsePoly constant_like(const SparsePoly& like, const BigRational& c);
  static SparsePoly variable_like(const SparsePoly& like, std::size_t index);

  const std::vector<std::string>& variables() const { return *vars_; }
  std::size_t num_variables() const { return vars_->size(); }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;
  // Leading term in lex order; precondition: nonzero.
  const std::pair<const Exponents, BigRational>& leading_term() const { return *terms_.begin(); }
  BigRational coefficient(const Exponents& e) const;

  void add_term(const Exponents& e, const BigRational& c);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  SparsePoly& operator*=(const BigRational& c);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  friend SparsePoly operator*(SparsePoly a, const BigRational& c) { return a *= c; }
  friend SparsePoly operator*(const BigRational& c, SparsePoly a) { return a *= c; }
  SparsePoly operator-() const;
  SparsePoly pow(int e) const;

  bool operator==(const SparsePoly& o) const;

  BigRational evaluate(std::span<const BigRational> x) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> x) const;
  SparsePoly derivative(std::size_t index) const;

  // e.g. "x1*x3 - x1 + 2*x2^2 - 1/2".
  std::string to_string() const;

  bool same_variables(const SparsePoly& o) const;

 private:
  void require_same(const SparsePoly& o) const;

  std::shared_ptr<const std::vector<std::string>> vars_;
  TermMap terms_;
};

// Quotient q with f = q*g exactly; NotDivisible if the remainder is nonzero.
SparsePoly divide_exact(const SparsePoly& f, const SparsePoly& g);

std::vector<std::string> chart_variable_names(std::size_t count);  // x1..xk

}  // namespace minkin
