#include "minkin/exact/rational.hpp"

#include <cctype>

#include "minkin/error.hpp"
#include "minkin/pair.hpp"

namespace minkin {

namespace {

std::string_view trim(std::string_view t) {
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  return t;
}

bool valid_integer(std::string_view t) {
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) t.remove_prefix(1);
  if (t.empty()) return false;
  for (char c : t)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'");
  if (num[0] == '+') num.remove_prefix(1);
  BigInt n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  BigRational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const BigRational& q) { return q.get_str(); }
std::string to_string(const BigInt& z) { return z.get_str(); }

std::string pair_label(Pair p) {
  if (p.i < 10 && p.j < 10) return std::to_string(p.i) + std::to_string(p.j);
  return std::to_string(p.i) + "." + std::to_string(p.j);
}

Pair parse_pair_label(const std::string& text) {
  int a = 0, b = 0;
  auto dot = text.find('.');
  try {
    if (dot != std::string::npos) {
      a = std::stoi(text.substr(0, dot));
      b = std::stoi(text.substr(dot + 1));
    } else if (text.size() == 2 && std::isdigit(static_cast<unsigned char>(text[0])) &&
               std::isdigit(static_cast<unsigned char>(text[1]))) {
      a = text[0] - '0';
      b = text[1] - '0';
    } else {
      throw Error(ErrorCode::ParseError, "bad pair label '" + text + "'");
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "bad pair label '" + text + "'");
  }
  if (a == b || a < 1 || b < 1) throw Error(ErrorCode::ParseError, "bad pair label '" + text + "'");
  return make_pair_sorted(a, b);
}

}  // namespace minkin
