#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "minkin/exact/rational.hpp"
#include "minkin/exact/sparse_poly.hpp"
#include "minkin/pair.hpp"

namespace minkin {

using SValues = std::function<BigRational(Pair)>;
using SValuesNumeric = std::function<std::complex<double>(Pair)>;

// Integer linear form Σ c_ij s_ij over the Mandelstam variables.
class LinearForm {
 public:
  LinearForm() = default;
  static LinearForm variable(Pair p, std::int64_t c = 1);

  const std::map<Pair, std::int64_t>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t coefficient(Pair p) const;
  void add(Pair p, std::int64_t c);

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator-=(const LinearForm& o);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
  LinearForm operator-() const;
  LinearForm scaled(std::int64_t c) const;

  std::int64_t content() const;  // gcd of |coefficients|, 0 for the zero form
  // Divides by the content and makes the first coefficient positive;
  // returns the factor removed (form == factor * normalized()).
  std::int64_t normalize();

  BigRational evaluate(const SValues& s) const;
  std::complex<double> evaluate(const SValuesNumeric& s) const;

  SparsePoly to_poly(const std::vector<Pair>& var_order, const std::vector<std::string>& names) const;

  // "s13 + s14 - 2*s34"
  std::string to_string() const;

  auto operator<=>(const LinearForm&) const = default;

 private:
  std::map<Pair, std::int64_t> coeffs_;
};

std::string s_variable_name(Pair p);  // "s13", or "s1.10" for two-digit labels

}  // namespace minkin
