#include "minkin/exact/linalg.hpp"

#include "minkin/error.hpp"

namespace minkin {

namespace {

constexpr std::size_t kMaxDetSize = 8;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    BigRational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col) == 0) continue;
      BigRational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

SparsePoly det_polynomial_matrix(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  if (n > kMaxDetSize) throw Error(ErrorCode::NotSquare, "determinant size above 8");
  if (n == 0) return SparsePoly();
  PolyMatrix a = m;
  SparsePoly prev = SparsePoly::constant_like(a(0, 0), 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return SparsePoly::constant_like(a(0, 0), 0);
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = divide_exact(a(k, k) * a(i, j) - a(i, k) * a(k, j), prev);
    }
    prev = a(k, k);
  }
  SparsePoly d = a(n - 1, n - 1);
  return negate ? -d : d;
}

BigRational det_rational(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw Error(ErrorCode::NotSquare, "determinant of a non-square matrix");
  RationalMatrix a = m;
  BigRational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      BigRational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::vector<std::vector<BigInt>> nullspace_rational(const RationalMatrix& a) {
  RationalMatrix r = a;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<BigInt>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<BigRational> v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
    BigInt lcm = 1;
    for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
    std::vector<BigInt> w(v.size());
    BigInt g = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      w[k] = BigRational(v[k] * lcm).get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[k].get_mpz_t());
    }
    int lead = 0;
    for (const auto& z : w)
      if (z != 0) {
        lead = sgn(z);
        break;
      }
    if (lead < 0) g = -g;
    for (auto& z : w) z /= g;
    basis.push_back(std::move(w));
  }
  return basis;
}

std::size_t rank_rational(const RationalMatrix& a) {
  RationalMatrix r = a;
  return rref(r).size();
}

std::optional<std::vector<BigRational>> solve_rational(const RationalMatrix& a, const std::vector<BigRational>& b) {
  if (b.size() != a.rows()) throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  if (pivots.size() != a.cols()) return std::nullopt;
  std::vector<BigRational> x(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug(k, a.cols());
  return x;
}

}  // namespace minkin
