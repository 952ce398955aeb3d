#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "minkin/combinat/hypertree.hpp"
#include "minkin/combinat/two_tree.hpp"
#include "minkin/exact/linalg.hpp"
#include "minkin/moduli/chart.hpp"

namespace minkin {

// (n-2) x n matrix over the GR2 chart with one row
//   p_jk e_i - p_ik e_j + p_ij e_k
// per triple {i < j < k}. For a 2-tree the triples are its triangles in
// construction order followed by {1,2,n}.
struct OnShellMatrix {
  int n = 0;
  std::vector<Triple> rows;
  PolyMatrix entries;
};

OnShellMatrix matrix_MT(const TwoTree& t);
OnShellMatrix matrix_MT(const Hypertree& h);

// Maximal minor with columns 1 and 2 deleted, scaled to a positive leading
// coefficient. Guard: the minors deleting {1,3} and {2,3} must be
// ±p_13·Δ and ±p_23·Δ (NOT_DIVISIBLE otherwise).
SparsePoly delta(const OnShellMatrix& m);

// Π_{e in T} p_e^{v(e)-1} on the chart, same sign normalization.
SparsePoly delta_monomial(const TwoTree& t);

struct ChartRational {
  SparsePoly num;
  SparsePoly den;
  BigRational evaluate(std::span<const BigRational> x) const;
  std::complex<double> evaluate(std::span<const std::complex<double>> x) const;
  // Cross-multiplied comparison.
  bool equals(const ChartRational& o) const { return num * o.den == o.num * den; }
};

// Δ² / Π_{ijk} p_ij p_ik p_jk.
ChartRational integrand(const OnShellMatrix& m);

// Edge -> v(e) - 2 over the edges of T together with {1,n} and {2,n}, where
// v counts the triangles of T plus the special triple {1,2,n}.
std::map<Pair, int> integrand_exponents(const TwoTree& t);
ChartRational monomial_rational(int n, const std::map<Pair, int>& exponents);

// T is planar iff T ∪ {1n, 2n} triangulates the n-gon 1,n,2,3,...,n-1, i.e.
// T triangulates the polygon 1,2,...,n-1.
bool is_planar(const TwoTree& t);
// -1 on the edges of the cycle 1,n,2,3,...,n-1.
std::map<Pair, int> parke_taylor_exponents(int n);

// The 3(n-2) Plücker factors of the integrand denominator, row by row.
std::vector<SparsePoly> triple_minor_product_factors(const OnShellMatrix& m);

}  // namespace minkin
