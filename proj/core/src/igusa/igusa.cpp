#include "g2qm/igusa/igusa.hpp"

#include <algorithm>
#include <functional>

namespace g2qm {
namespace {

// Binary form sum c[k] x^k z^(n-k).
template <class T>
struct Form {
  int n;
  std::vector<T> c;
};

template <class T>
T konst(const T& like, const Rational& q) {
  return field_const(like, q);
}

template <class T>
Form<T> dx(const Form<T>& f) {
  std::vector<T> c;
  for (int k = 1; k <= f.n; ++k) c.push_back(f.c[k] * konst(f.c[0], k));
  return {f.n - 1, std::move(c)};
}

template <class T>
Form<T> dz(const Form<T>& f) {
  std::vector<T> c;
  for (int k = 0; k < f.n; ++k) c.push_back(f.c[k] * konst(f.c[0], f.n - k));
  return {f.n - 1, std::move(c)};
}

template <class T>
Form<T> derive(Form<T> f, int ax, int az) {
  for (int i = 0; i < ax; ++i) f = dx(f);
  for (int i = 0; i < az; ++i) f = dz(f);
  return f;
}

Rational factorial(int n) {
  Rational r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Rational binom(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

// (f, g)_k = (n-k)!(m-k)!/(n! m!) sum_j (-1)^j C(k,j) d^(k-j)_x d^j_z f . d^j_x d^(k-j)_z g
template <class T>
Form<T> transvectant(const Form<T>& f, const Form<T>& g, int k) {
  const T zero = field_zero(f.c[0]);
  Form<T> out{f.n + g.n - 2 * k, std::vector<T>(f.n + g.n - 2 * k + 1, zero)};
  for (int j = 0; j <= k; ++j) {
    Form<T> a = derive(f, k - j, j), b = derive(g, j, k - j);
    T w = konst(zero, (j % 2 ? -1 : 1) * binom(k, j));
    for (int p = 0; p <= a.n; ++p)
      for (int q = 0; q <= b.n; ++q) out.c[p + q] += w * a.c[p] * b.c[q];
  }
  T scale = konst(zero, factorial(f.n - k) * factorial(g.n - k) / (factorial(f.n) * factorial(g.n)));
  for (auto& x : out.c) x = x * scale;
  return out;
}

template <class T>
IgusaClebsch<T> clebsch_route(const Poly<T>& f) {
  if (f.degree() != 5 && f.degree() != 6)
    throw std::invalid_argument("Igusa-Clebsch invariants need degree 5 or 6");
  Form<T> s{6, {}};
  for (int k = 0; k <= 6; ++k) s.c.push_back(f.coeff(k));
  auto i = transvectant(s, s, 4);
  auto delta = transvectant(i, i, 2);
  auto y1 = transvectant(s, i, 4);
  auto y2 = transvectant(i, y1, 2);
  auto y3 = transvectant(i, y2, 2);
  T a = transvectant(s, s, 6).c[0];
  T b = transvectant(i, i, 4).c[0];
  T c = transvectant(i, delta, 4).c[0];
  T d = transvectant(y3, y1, 2).c[0];
  auto k = [&](long v) { return konst(a, v); };
  IgusaClebsch<T> r;
  r.i2 = k(-120) * a;
  r.i4 = k(-720) * a * a + k(6750) * b;
  r.i6 = k(8640) * a * a * a - k(108000) * a * b + k(202500) * c;
  r.i10 = k(-62208) * a * a * a * a * a + k(972000) * a * a * a * b + k(1620000) * a * a * c -
          k(3037500) * a * b * b - k(6075000) * b * c - k(4556250) * d;
  return r;
}

template <class T>
std::array<T, 3> absolute(const IgusaClebsch<T>& ic, bool zero10) {
  if (zero10) throw SingularModel("I10 vanishes: the model is singular");
  T sq = ic.i2 * ic.i2;
  return {sq * sq * ic.i2 / ic.i10, sq * ic.i2 * ic.i4 / ic.i10, sq * ic.i6 / ic.i10};
}

template <class T>
T power(const T& x, int e) {
  T r = field_const(x, 1);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

constexpr std::array<int, 4> kWeights{1, 2, 3, 5};

template <class T>
std::array<T, 4> as_array(const IgusaClebsch<T>& x) {
  return {x.i2, x.i4, x.i6, x.i10};
}

}  // namespace

IgusaClebsch<QuadElem> igusa_clebsch(const PolyQF& f) { return clebsch_route(f); }
IgusaClebsch<BigComplex> igusa_clebsch(const PolyC& f) { return clebsch_route(f); }

IgusaClebsch<BigComplex> igusa_clebsch_roots(const BranchPoints& bp) {
  const int digits = bp.digits;
  std::vector<BigComplex> r = bp.roots;
  const int n = 6;
  // index 5 is the point at infinity for quintic models, where (x_i - infinity)^2 counts as 1
  auto d = [&](int i, int j) {
    if (bp.infinity && (i == 5 || j == 5)) return BigComplex(Real(1), Real(0), digits);
    BigComplex t = r[i] - r[j];
    return t * t;
  };
  BigComplex i2(digits), i4(digits), i6(digits), i10(Real(1), Real(0), digits);
  std::vector<int> idx{0, 1, 2, 3, 4, 5};
  // 15 pairings
  for (int b = 1; b < n; ++b) {
    std::vector<int> rest;
    for (int k = 1; k < n; ++k)
      if (k != b) rest.push_back(k);
    for (int e = 1; e < 4; ++e) {
      std::vector<int> last;
      for (int k = 1; k < 4; ++k)
        if (k != e) last.push_back(rest[k]);
      i2 += d(0, b) * d(rest[0], rest[e]) * d(last[0], last[1]);
    }
  }
  // 10 splits into triples {0, p, q} | rest, and the 6 matchings between them
  for (int p = 1; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      std::array<int, 3> t{0, p, q}, u{};
      int m = 0;
      for (int k = 1; k < n; ++k)
        if (k != p && k != q) u[m++] = k;
      BigComplex base = d(t[0], t[1]) * d(t[1], t[2]) * d(t[2], t[0]) * d(u[0], u[1]) *
                        d(u[1], u[2]) * d(u[2], u[0]);
      i4 += base;
      std::array<int, 3> perm = u;
      std::sort(perm.begin(), perm.end());
      do {
        i6 += base * d(t[0], perm[0]) * d(t[1], perm[1]) * d(t[2], perm[2]);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) i10 *= d(i, j);
  const BigComplex& lc = bp.leading;
  BigComplex lc2 = lc * lc;
  BigComplex lc4 = lc2 * lc2;
  return {lc2 * i2, lc4 * i4, lc4 * lc2 * i6, lc4 * lc4 * lc2 * i10};
}

std::array<QuadElem, 3> absolute_invariants(const IgusaClebsch<QuadElem>& ic) {
  return absolute(ic, ic.i10.is_zero());
}

std::array<BigComplex, 3> absolute_invariants(const IgusaClebsch<BigComplex>& ic) {
  Real scale = std::max({Real(1), pow(ic.i2.abs(), 5), pow(ic.i4.abs(), Real(5) / 2),
                         pow(ic.i6.abs(), Real(5) / 3)});
  bool zero = ic.i10.abs() < pow10(-(ic.i10.digits() * 2) / 3) * scale;
  return absolute(ic, zero);
}

InvariantTuple igusa_invariants(const CurveModel& c, int digits) {
  InvariantTuple t;
  t.exact = igusa_clebsch(c.poly());
  t.absolute = absolute_invariants(t.exact);
  t.numeric = igusa_clebsch_roots(find_roots(c, digits));
  t.absolute_numeric = absolute_invariants(t.numeric);
  return t;
}

bool same_invariants(const IgusaClebsch<QuadElem>& a, const IgusaClebsch<QuadElem>& b) {
  auto x = as_array(a), y = as_array(b);
  if (x[3].is_zero() || y[3].is_zero()) throw SingularModel("I10 vanishes: the model is singular");
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q)
      if (!(power(x[p], kWeights[q]) * power(y[q], kWeights[p]) ==
            power(y[p], kWeights[q]) * power(x[q], kWeights[p])))
        return false;
  return true;
}

bool same_invariants(const IgusaClebsch<BigComplex>& a, const IgusaClebsch<BigComplex>& b,
                     int digits) {
  auto x = as_array(a), y = as_array(b);
  // put both tuples on the scale |I10| = 1 before comparing
  auto normalize = [](std::array<BigComplex, 4>& v) {
    Real s = pow(v[3].abs(), Real(1) / 5);
    Real f = 1;
    for (int p = 0; p < 4; ++p) {
      f = pow(s, kWeights[p]);
      v[p] = v[p] * (Real(1) / f);
    }
  };
  normalize(x);
  normalize(y);
  const Real tol = pow10(-digits / 2);
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q) {
      BigComplex l = power(x[p], kWeights[q]) * power(y[q], kWeights[p]);
      BigComplex r = power(y[p], kWeights[q]) * power(x[q], kWeights[p]);
      Real size = std::max({Real(1), l.abs(), r.abs()});
      if ((l - r).abs() > tol * size) return false;
    }
  return true;
}

bool same_invariants(const CurveModel& a, const CurveModel& b) {
  if (a.delta() != b.delta()) throw std::invalid_argument("curves live over different fields");
  return same_invariants(igusa_clebsch(a.poly()), igusa_clebsch(b.poly()));
}

CurveModel conjugate_curve(const CurveModel& c) {
  return CurveModel(c.poly().map([](const QuadElem& x) { return x.conj(); }),
                    c.label().empty() ? std::string() : "conj(" + c.label() + ")");
}

}  // namespace g2qm
