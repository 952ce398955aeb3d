#include "minkin/amplitude/onshell.hpp"

#include <algorithm>
#include <set>

#include "minkin/error.hpp"

namespace minkin {

namespace {

OnShellMatrix build(int n, std::vector<Triple> rows) {
  GaugeChart chart = GaugeChart::gr2(n);
  OnShellMatrix m;
  m.n = n;
  m.rows = std::move(rows);
  m.entries = PolyMatrix(m.rows.size(), static_cast<std::size_t>(n), chart.zero());
  for (std::size_t r = 0; r < m.rows.size(); ++r) {
    auto [i, j, k] = m.rows[r];
    m.entries(r, static_cast<std::size_t>(i - 1)) = pluecker2(chart, j, k);
    m.entries(r, static_cast<std::size_t>(j - 1)) = -pluecker2(chart, i, k);
    m.entries(r, static_cast<std::size_t>(k - 1)) = pluecker2(chart, i, j);
  }
  return m;
}

SparsePoly minor_without(const OnShellMatrix& m, int a, int b) {
  std::vector<std::size_t> keep;
  for (int c = 1; c <= m.n; ++c)
    if (c != a && c != b) keep.push_back(static_cast<std::size_t>(c - 1));
  PolyMatrix sub(m.rows.size(), keep.size());
  for (std::size_t r = 0; r < m.rows.size(); ++r)
    for (std::size_t c = 0; c < keep.size(); ++c) sub(r, c) = m.entries(r, keep[c]);
  return det_polynomial_matrix(sub);
}

SparsePoly positive_leading(SparsePoly p) {
  if (!p.is_zero() && p.leading_term().second < 0) return -p;
  return p;
}

}  // namespace

OnShellMatrix matrix_MT(const TwoTree& t) {
  std::vector<Triple> rows;
  for (const Triangle& tri : t.triangles()) rows.push_back(make_triple(tri.i, tri.j, tri.k));
  rows.push_back(make_triple(1, 2, t.n()));
  return build(t.n(), rows);
}

OnShellMatrix matrix_MT(const Hypertree& h) { return build(h.n(), h.triples()); }

SparsePoly delta(const OnShellMatrix& m) {
  if (m.rows.size() + 2 != static_cast<std::size_t>(m.n))
    throw Error(ErrorCode::WrongTripleCount, "on-shell matrix needs n-2 rows");
  SparsePoly d = positive_leading(minor_without(m, 1, 2));
  if (d.is_zero()) throw Error(ErrorCode::NotDivisible, "vanishing maximal minor");
  GaugeChart chart = GaugeChart::gr2(m.n);
  for (int other : {1, 2}) {
    SparsePoly p = pluecker2(chart, other, 3);
    SparsePoly q = positive_leading(divide_exact(minor_without(m, other, 3), p));
    if (!(q == d)) throw Error(ErrorCode::NotDivisible, "maximal minors are not multiples of one divisor");
  }
  return d;
}

SparsePoly delta_monomial(const TwoTree& t) {
  GaugeChart chart = GaugeChart::gr2(t.n());
  TriangleStats st = tree_stats(t);
  SparsePoly r = chart.one();
  for (Pair e : t.support()) r *= pluecker2(chart, e.i, e.j).pow(st.v.at(e) - 1);
  return positive_leading(r);
}

BigRational ChartRational::evaluate(std::span<const BigRational> x) const {
  BigRational d = den.evaluate(x);
  if (d == 0) throw Error(ErrorCode::DegeneratePoint, "integrand pole");
  return num.evaluate(x) / d;
}

std::complex<double> ChartRational::evaluate(std::span<const std::complex<double>> x) const {
  return num.evaluate(x) / den.evaluate(x);
}

std::vector<SparsePoly> triple_minor_product_factors(const OnShellMatrix& m) {
  GaugeChart chart = GaugeChart::gr2(m.n);
  std::vector<SparsePoly> out;
  for (const auto& [i, j, k] : m.rows) {
    out.push_back(pluecker2(chart, i, j));
    out.push_back(pluecker2(chart, i, k));
    out.push_back(pluecker2(chart, j, k));
  }
  return out;
}

ChartRational integrand(const OnShellMatrix& m) {
  SparsePoly d = delta(m);
  SparsePoly den = SparsePoly::constant_like(d, 1);
  for (const auto& f : triple_minor_product_factors(m)) den *= f;
  return {d * d, den};
}

std::map<Pair, int> integrand_exponents(const TwoTree& t) {
  TriangleStats st = tree_stats(t);
  std::map<Pair, int> v = st.v;
  const int n = t.n();
  for (Pair e : {Pair{1, 2}, Pair{1, n}, Pair{2, n}}) ++v[e];
  std::map<Pair, int> out;
  for (const auto& [e, c] : v) out[e] = c - 2;
  return out;
}

ChartRational monomial_rational(int n, const std::map<Pair, int>& exponents) {
  GaugeChart chart = GaugeChart::gr2(n);
  ChartRational r{chart.one(), chart.one()};
  for (const auto& [e, k] : exponents) {
    SparsePoly p = pluecker2(chart, e.i, e.j);
    if (k > 0) r.num *= p.pow(k);
    if (k < 0) r.den *= p.pow(-k);
  }
  return r;
}

bool is_planar(const TwoTree& t) {
  const int m = t.n() - 1;
  std::set<Pair> es(t.edges().begin(), t.edges().end());
  for (int i = 1; i < m; ++i)
    if (!es.count({i, i + 1})) return false;
  if (!es.count({1, m})) return false;
  // Chords (a,b) and (c,d) of the polygon 1..m cross iff exactly one of
  // c, d lies strictly between a and b.
  for (Pair e : es)
    for (Pair f : es) {
      auto inside = [&](int v) { return e.i < v && v < e.j; };
      auto shared = [&](int v) { return v == e.i || v == e.j; };
      if (shared(f.i) || shared(f.j)) continue;
      if (inside(f.i) != inside(f.j)) return false;
    }
  return true;
}

std::map<Pair, int> parke_taylor_exponents(int n) {
  std::vector<int> cyc{1, n};
  for (int k = 2; k <= n - 1; ++k) cyc.push_back(k);
  std::map<Pair, int> out;
  for (std::size_t a = 0; a < cyc.size(); ++a) out[make_pair_sorted(cyc[a], cyc[(a + 1) % cyc.size()])] = -1;
  return out;
}

}  // namespace minkin
