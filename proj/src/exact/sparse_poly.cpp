#include "minkin/exact/sparse_poly.hpp"

#include <algorithm>
#include <sstream>

#include "minkin/error.hpp"

namespace minkin {

SparsePoly::SparsePoly(std::vector<std::string> vars)
    : vars_(std::make_shared<const std::vector<std::string>>(std::move(vars))) {}

SparsePoly::SparsePoly(std::vector<std::string> vars, const BigRational& c) : SparsePoly(std::move(vars)) {
  add_term(Exponents(num_variables(), 0), c);
}

SparsePoly SparsePoly::constant(std::vector<std::string> vars, const BigRational& c) {
  return SparsePoly(std::move(vars), c);
}

SparsePoly SparsePoly::variable(std::vector<std::string> vars, std::size_t index) {
  SparsePoly p(std::move(vars));
  if (index >= p.num_variables()) throw Error(ErrorCode::BadIndex, "variable index out of range");
  Exponents e(p.num_variables(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

SparsePoly SparsePoly::constant_like(const SparsePoly& like, const BigRational& c) {
  SparsePoly p;
  p.vars_ = like.vars_;
  p.add_term(Exponents(p.num_variables(), 0), c);
  return p;
}

SparsePoly SparsePoly::variable_like(const SparsePoly& like, std::size_t index) {
  if (index >= like.num_variables()) throw Error(ErrorCode::BadIndex, "variable index out of range");
  SparsePoly p;
  p.vars_ = like.vars_;
  Exponents e(p.num_variables(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

bool SparsePoly::same_variables(const SparsePoly& o) const {
  return vars_ == o.vars_ || *vars_ == *o.vars_;
}

void SparsePoly::require_same(const SparsePoly& o) const {
  if (!same_variables(o)) throw Error(ErrorCode::MixedVariables, "polynomials over different variable lists");
}

bool SparsePoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

int SparsePoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int k : e) s += k;
    d = std::max(d, s);
  }
  return d;
}

BigRational SparsePoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void SparsePoly::add_term(const Exponents& e, const BigRational& c) {
  if (e.size() != num_variables()) throw Error(ErrorCode::DimensionMismatch, "exponent vector length");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  require_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  a.require_same(b);
  SparsePoly r;
  r.vars_ = a.vars_;
  SparsePoly::Exponents e(a.num_variables());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) { return *this = *this * o; }

SparsePoly& SparsePoly::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r = *this;
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

SparsePoly SparsePoly::pow(int k) const {
  if (k < 0) throw Error(ErrorCode::BadIndex, "negative polynomial power");
  SparsePoly r = constant_like(*this, 1), base = *this;
  while (k) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return r;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
  return same_variables(o) && terms_ == o.terms_;
}

BigRational SparsePoly::evaluate(std::span<const BigRational> x) const {
  if (x.size() != num_variables()) throw Error(ErrorCode::DimensionMismatch, "evaluation point length");
  BigRational sum = 0, t;
  for (const auto& [e, c] : terms_) {
    t = c;
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int p = 0; p < e[k]; ++p) t *= x[k];
    sum += t;
  }
  return sum;
}

std::complex<double> SparsePoly::evaluate(std::span<const std::complex<double>> x) const {
  if (x.size() != num_variables()) throw Error(ErrorCode::DimensionMismatch, "evaluation point length");
  std::complex<double> sum = 0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.get_d();
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int p = 0; p < e[k]; ++p) t *= x[k];
    sum += t;
  }
  return sum;
}

SparsePoly SparsePoly::derivative(std::size_t index) const {
  SparsePoly r;
  r.vars_ = vars_;
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponents d = e;
    --d[index];
    r.add_term(d, c * e[index]);
  }
  return r;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigRational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    if (mono.empty()) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << mono;
    }
  }
  return out.str();
}

SparsePoly divide_exact(const SparsePoly& f, const SparsePoly& g) {
  if (!f.same_variables(g)) throw Error(ErrorCode::MixedVariables, "divide_exact over different variables");
  if (g.is_zero()) throw Error(ErrorCode::NotDivisible, "division by the zero polynomial");
  SparsePoly q = SparsePoly::constant_like(f, 0), r = f;
  const auto& [lg_e, lg_c] = g.leading_term();
  const std::size_t nv = f.num_variables();
  while (!r.is_zero()) {
    const auto& [lr_e, lr_c] = r.leading_term();
    SparsePoly::Exponents e(nv);
    for (std::size_t k = 0; k < nv; ++k) {
      e[k] = lr_e[k] - lg_e[k];
      // Under lex order the leading term of r must be divisible by that of g
      // for an exact quotient to exist.
      if (e[k] < 0) throw Error(ErrorCode::NotDivisible, "nonzero remainder");
    }
    SparsePoly t = SparsePoly::constant_like(f, 0);
    t.add_term(e, lr_c / lg_c);
    q += t;
    r -= t * g;
  }
  return q;
}

std::vector<std::string> chart_variable_names(std::size_t count) {
  std::vector<std::string> v;
  for (std::size_t k = 1; k <= count; ++k) v.push_back("x" + std::to_string(k));
  return v;
}

}  // namespace minkin
