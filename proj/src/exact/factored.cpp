#include "minkin/exact/factored.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "minkin/error.hpp"

namespace minkin {

namespace {

BigRational rational_pow(const BigRational& base, int e) {
  BigRational r = 1;
  for (int k = 0; k < (e < 0 ? -e : e); ++k) r *= base;
  if (e < 0) {
    if (r == 0) throw Error(ErrorCode::DegenerateS, "zero raised to a negative power");
    r = 1 / r;
  }
  return r;
}

}  // namespace

FactoredRational::FactoredRational(const BigRational& c) : coeff_(c) {}

FactoredRational::FactoredRational(const LinearForm& form, int exponent) {
  factors_.emplace_back(form, exponent);
  canonicalize();
}

FactoredRational::FactoredRational(const BigRational& c, std::vector<Factor> factors)
    : coeff_(c), factors_(std::move(factors)) {
  canonicalize();
}

void FactoredRational::canonicalize() {
  std::map<LinearForm, int> acc;
  bool zero = coeff_ == 0;
  for (auto& [form, e] : factors_) {
    if (e == 0) continue;
    if (form.is_zero()) {
      if (e < 0) throw Error(ErrorCode::DegenerateS, "division by a vanishing linear form");
      zero = true;
      continue;
    }
    LinearForm g = form;
    std::int64_t c = g.normalize();
    coeff_ *= rational_pow(BigRational(static_cast<long>(c)), e);
    acc[g] += e;
  }
  factors_.clear();
  if (zero) {
    coeff_ = 0;
    return;
  }
  for (auto& [form, e] : acc)
    if (e != 0) factors_.emplace_back(form, e);
}

int FactoredRational::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

FactoredRational& FactoredRational::operator*=(const FactoredRational& o) {
  coeff_ *= o.coeff_;
  factors_.insert(factors_.end(), o.factors_.begin(), o.factors_.end());
  canonicalize();
  return *this;
}

FactoredRational& FactoredRational::operator/=(const FactoredRational& o) { return *this *= o.reciprocal(); }

FactoredRational FactoredRational::reciprocal() const {
  if (coeff_ == 0) throw Error(ErrorCode::DegenerateS, "reciprocal of zero");
  FactoredRational r;
  r.coeff_ = 1 / coeff_;
  for (const auto& [f, e] : factors_) r.factors_.emplace_back(f, -e);
  return r;
}

FactoredRational FactoredRational::operator-() const {
  FactoredRational r = *this;
  r.coeff_ = -r.coeff_;
  return r;
}

FactoredRational FactoredRational::pow(int e) const {
  if (e < 0) return reciprocal().pow(-e);
  FactoredRational r;
  r.coeff_ = rational_pow(coeff_, e);
  for (const auto& [f, k] : factors_) r.factors_.emplace_back(f, k * e);
  r.canonicalize();
  return r;
}

BigRational FactoredRational::evaluate(const SValues& s) const {
  BigRational r = coeff_;
  for (const auto& [f, e] : factors_) {
    BigRational v = f.evaluate(s);
    if (v == 0 && e < 0) throw Error(ErrorCode::DegenerateS, "denominator form " + f.to_string() + " vanishes");
    r *= rational_pow(v, e);
  }
  return r;
}

std::complex<double> FactoredRational::evaluate(const SValuesNumeric& s) const {
  std::complex<double> r = coeff_.get_d();
  for (const auto& [f, e] : factors_) r *= std::pow(f.evaluate(s), e);
  return r;
}

std::vector<Pair> FactoredRational::variables() const {
  std::set<Pair> vars;
  for (const auto& [f, e] : factors_)
    for (const auto& [p, c] : f.coefficients()) vars.insert(p);
  return {vars.begin(), vars.end()};
}

std::vector<std::string> s_variable_names(const std::vector<Pair>& pairs) {
  std::vector<std::string> names;
  for (Pair p : pairs) names.push_back(s_variable_name(p));
  return names;
}

std::pair<SparsePoly, SparsePoly> FactoredRational::expand(const std::vector<Pair>& var_order) const {
  auto names = s_variable_names(var_order);
  SparsePoly num(names, BigRational(coeff_.get_num()));
  SparsePoly den(names, BigRational(coeff_.get_den()));
  for (const auto& [f, e] : factors_) {
    SparsePoly p = f.to_poly(var_order, names);
    if (e > 0)
      num *= p.pow(e);
    else
      den *= p.pow(-e);
  }
  return {num, den};
}

std::string FactoredRational::to_string() const {
  if (coeff_ == 0) return "0";
  std::ostringstream out;
  if (coeff_ < 0) out << "-";
  BigRational mag = abs(coeff_);
  bool need_star = false;
  if (mag != 1 || factors_.empty()) {
    out << mag.get_str();
    need_star = true;
  }
  for (const auto& [f, e] : factors_) {
    if (need_star) out << "*";
    out << "(" << f.to_string() << ")";
    if (e != 1) out << "^" << e;
    need_star = true;
  }
  return out.str();
}

void FactoredSum::add(FactoredRational term) {
  if (!term.is_zero()) terms_.push_back(std::move(term));
}

BigRational FactoredSum::evaluate(const SValues& s) const {
  BigRational r = 0;
  for (const auto& t : terms_) r += t.evaluate(s);
  return r;
}

std::complex<double> FactoredSum::evaluate(const SValuesNumeric& s) const {
  std::complex<double> r = 0;
  for (const auto& t : terms_) r += t.evaluate(s);
  return r;
}

std::pair<SparsePoly, FactoredRational> FactoredSum::combine(const std::vector<Pair>& var_order) const {
  std::map<LinearForm, int> den;
  for (const auto& t : terms_)
    for (const auto& [f, e] : t.factors())
      if (e < 0) den[f] = std::max(den[f], -e);
  auto names = s_variable_names(var_order);
  SparsePoly num(names);
  for (const auto& t : terms_) {
    std::map<LinearForm, int> own;
    for (const auto& [f, e] : t.factors()) own[f] = e;
    SparsePoly term(names, t.coefficient());
    for (const auto& [f, e] : own)
      if (e > 0) term *= f.to_poly(var_order, names).pow(e);
    for (const auto& [f, d] : den) {
      int have = own.count(f) && own[f] < 0 ? -own[f] : 0;
      if (d - have > 0) term *= f.to_poly(var_order, names).pow(d - have);
    }
    num += term;
  }
  std::vector<FactoredRational::Factor> dfac;
  for (const auto& [f, d] : den) dfac.emplace_back(f, -d);
  return {num, FactoredRational(1, dfac)};
}

std::string FactoredSum::to_string() const {
  if (terms_.empty()) return "0";
  if (terms_.size() == 1) return terms_.front().to_string();
  std::set<Pair> vars;
  for (const auto& t : terms_)
    for (Pair p : t.variables()) vars.insert(p);
  auto [num, den] = combine({vars.begin(), vars.end()});
  if (num.is_zero()) return "0";
  std::string out = "(" + num.to_string() + ")";
  for (const auto& [f, e] : den.factors()) out += "*(" + f.to_string() + ")^" + std::to_string(e);
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : t_(text) {}

  FactoredRational parse() {
    FactoredRational v = sum();
    skip();
    if (pos_ != t_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + std::string(t_) + "'");
  }
  void skip() {
    while (pos_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < t_.size() ? t_[pos_] : '\0';
  }
  bool digit(char c) const { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

  // A value usable inside a sum: c * form.
  static std::optional<std::pair<BigRational, LinearForm>> as_linear(const FactoredRational& v) {
    if (v.is_zero()) return std::pair<BigRational, LinearForm>{0, LinearForm()};
    if (v.factors().size() != 1 || v.factors()[0].second != 1) return std::nullopt;
    return std::pair<BigRational, LinearForm>{v.coefficient(), v.factors()[0].first};
  }

  FactoredRational sum() {
    std::vector<std::pair<bool, FactoredRational>> terms;
    bool neg = false;
    if (peek() == '-' || peek() == '+') neg = t_[pos_++] == '-';
    terms.emplace_back(neg, product());
    while (peek() == '+' || peek() == '-') {
      neg = t_[pos_++] == '-';
      terms.emplace_back(neg, product());
    }
    if (terms.size() == 1) return terms[0].first ? -terms[0].second : terms[0].second;
    BigInt lcm = 1;
    std::vector<std::pair<BigRational, LinearForm>> lin;
    for (auto& [n, v] : terms) {
      auto l = as_linear(v);
      if (!l) fail("sum of non-linear terms");
      if (n) l->first = -l->first;
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), l->first.get_den().get_mpz_t());
      lin.push_back(*l);
    }
    LinearForm total;
    for (auto& [c, f] : lin) {
      BigRational scaled = c * lcm;
      if (!scaled.get_num().fits_slong_p()) fail("coefficient overflow");
      total += f.scaled(scaled.get_num().get_si());
    }
    if (total.is_zero()) return FactoredRational(0);
    return FactoredRational(BigRational(1) / lcm, {{total, 1}});
  }

  FactoredRational product() {
    FactoredRational v = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        v *= power();
      } else if (c == '/') {
        ++pos_;
        FactoredRational d = power();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else if (c == '(' || c == 's' || digit(c)) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  FactoredRational power() {
    FactoredRational base = atom();
    if (peek() == '^') {
      ++pos_;
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      skip();
      std::size_t start = pos_;
      while (pos_ < t_.size() && digit(t_[pos_])) ++pos_;
      if (start == pos_) fail("missing exponent");
      int e = std::stoi(std::string(t_.substr(start, pos_ - start)));
      if (base.is_zero() && neg) fail("zero to a negative power");
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  FactoredRational atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      FactoredRational v = sum();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (digit(c)) {
      std::size_t start = pos_;
      while (pos_ < t_.size() && digit(t_[pos_])) ++pos_;
      return FactoredRational(BigRational(BigInt(std::string(t_.substr(start, pos_ - start)))));
    }
    if (c == 's') {
      ++pos_;
      if (pos_ < t_.size() && t_[pos_] == '_') ++pos_;
      bool braced = pos_ < t_.size() && t_[pos_] == '{';
      if (braced) ++pos_;
      std::size_t start = pos_;
      while (pos_ < t_.size() && (digit(t_[pos_]) || t_[pos_] == '.')) ++pos_;
      std::string label(t_.substr(start, pos_ - start));
      if (braced) {
        if (pos_ >= t_.size() || t_[pos_] != '}') fail("expected '}'");
        ++pos_;
      }
      return FactoredRational(label_form(label));
    }
    fail("unexpected character");
  }

  // "13" -> s13; "1.10" -> s1.10; "123" -> s12 + s13 + s23 (multi-particle pole).
  LinearForm label_form(const std::string& label) {
    std::vector<int> idx;
    if (label.find('.') != std::string::npos) {
      std::stringstream in(label);
      std::string part;
      while (std::getline(in, part, '.')) {
        if (part.empty()) fail("bad variable label");
        idx.push_back(std::stoi(part));
      }
    } else {
      for (char d : label) idx.push_back(d - '0');
    }
    if (idx.size() < 2) fail("variable needs at least two indices");
    LinearForm f;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) {
        if (idx[a] == idx[b] || idx[a] < 1 || idx[b] < 1) fail("bad variable label");
        f.add(make_pair_sorted(idx[a], idx[b]), 1);
      }
    return f;
  }

  std::string_view t_;
  std::size_t pos_ = 0;
};

}  // namespace

FactoredRational parse_factored(std::string_view text) { return Parser(text).parse(); }

}  // namespace minkin
