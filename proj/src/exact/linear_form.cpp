#include "minkin/exact/linear_form.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "minkin/error.hpp"

namespace minkin {

LinearForm LinearForm::variable(Pair p, std::int64_t c) {
  LinearForm f;
  f.add(p, c);
  return f;
}

std::int64_t LinearForm::coefficient(Pair p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? 0 : it->second;
}

void LinearForm::add(Pair p, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  for (const auto& [p, c] : o.coeffs_) add(p, c);
  return *this;
}

LinearForm& LinearForm::operator-=(const LinearForm& o) {
  for (const auto& [p, c] : o.coeffs_) add(p, -c);
  return *this;
}

LinearForm LinearForm::operator-() const { return scaled(-1); }

LinearForm LinearForm::scaled(std::int64_t c) const {
  LinearForm r;
  if (c == 0) return r;
  for (const auto& [p, v] : coeffs_) r.coeffs_[p] = v * c;
  return r;
}

std::int64_t LinearForm::content() const {
  std::int64_t g = 0;
  for (const auto& [p, c] : coeffs_) g = std::gcd(g, c < 0 ? -c : c);
  return g;
}

std::int64_t LinearForm::normalize() {
  if (coeffs_.empty()) return 0;
  std::int64_t g = content();
  if (coeffs_.begin()->second < 0) g = -g;
  for (auto& [p, c] : coeffs_) c /= g;
  return g;
}

BigRational LinearForm::evaluate(const SValues& s) const {
  BigRational sum = 0;
  for (const auto& [p, c] : coeffs_) sum += BigRational(static_cast<long>(c)) * s(p);
  return sum;
}

std::complex<double> LinearForm::evaluate(const SValuesNumeric& s) const {
  std::complex<double> sum = 0;
  for (const auto& [p, c] : coeffs_) sum += static_cast<double>(c) * s(p);
  return sum;
}

SparsePoly LinearForm::to_poly(const std::vector<Pair>& var_order, const std::vector<std::string>& names) const {
  SparsePoly r(names);
  for (const auto& [p, c] : coeffs_) {
    auto it = std::find(var_order.begin(), var_order.end(), p);
    if (it == var_order.end()) throw Error(ErrorCode::BadIndex, "variable " + s_variable_name(p) + " not in order");
    SparsePoly::Exponents e(names.size(), 0);
    e[static_cast<std::size_t>(it - var_order.begin())] = 1;
    r.add_term(e, BigRational(static_cast<long>(c)));
  }
  return r;
}

std::string LinearForm::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : coeffs_) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) out << mag << "*";
    out << s_variable_name(p);
  }
  return out.str();
}

std::string s_variable_name(Pair p) { return "s" + pair_label(p); }

}  // namespace minkin
