#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace minkin {

// GMP keeps mpq_class canonical (den > 0, reduced) after every operation.
using BigInt = mpz_class;
using BigRational = mpq_class;

// Accepts "5", "-7/2", " 3 " ; throws Error(ParseError) otherwise.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& q);
std::string to_string(const BigInt& z);

inline int sign(const BigRational& q) { return sgn(q); }

}  // namespace minkin
