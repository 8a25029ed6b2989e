#include "g2qm/pollab/altform.hpp"

#include <stdexcept>

namespace g2qm {

namespace {

void swap_cols(RatMatrix& u, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < u.rows(); ++r) std::swap(u(r, a), u(r, b));
}

// col[dst] += c * col[src]
void add_col(RatMatrix& u, std::size_t dst, std::size_t src, const Integer& c) {
  for (std::size_t r = 0; r < u.rows(); ++r) u(r, dst) += Rational(c) * u(r, src);
}

Integer as_int(const Rational& q) { return num(q); }

}  // namespace

RatMatrix standard_alternating(const Integer& d1, const Integer& d2) {
  RatMatrix e(4, 4, Rational(0));
  e(0, 2) = Rational(d1);
  e(1, 3) = Rational(d2);
  e(2, 0) = Rational(-d1);
  e(3, 1) = Rational(-d2);
  return e;
}

Rational pfaffian(const RatMatrix& e) {
  if (e.rows() != 4 || e.cols() != 4) throw std::invalid_argument("pfaffian expects 4x4");
  return e(0, 1) * e(2, 3) - e(0, 2) * e(1, 3) + e(0, 3) * e(1, 2);
}

bool is_unimodular(const RatMatrix& u) {
  if (!is_integral(u) || u.rows() != u.cols()) return false;
  Rational d = determinant(u);
  return d == 1 || d == -1;
}

bool is_symplectic(const RatMatrix& u, const RatMatrix& e) {
  return is_unimodular(u) && u.transpose() * e * u == e;
}

FrobeniusForm frobenius_type(const RatMatrix& e) {
  if (e.rows() != 4 || e.cols() != 4) throw std::invalid_argument("alternating form must be 4x4");
  if (!is_integral(e)) throw std::invalid_argument("alternating form is not integral");
  if (!is_alternating(e)) throw std::invalid_argument("form is not alternating");
  if (pfaffian(e) == 0) throw std::invalid_argument("alternating form is degenerate");

  const std::size_t n = 4;
  RatMatrix u = rat_identity(n);
  std::vector<Integer> ds;
  for (std::size_t blk = 0; blk < n; blk += 2) {
    for (;;) {
      RatMatrix w = u.transpose() * e * u;
      std::size_t bi = n, bj = n;
      Integer best = 0;
      for (std::size_t i = blk; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          Integer v = boost::multiprecision::abs(as_int(w(i, j)));
          if (v != 0 && (best == 0 || v < best)) best = v, bi = i, bj = j;
        }
      if (bi == n) throw std::invalid_argument("alternating form is degenerate");
      swap_cols(u, blk, bi);
      swap_cols(u, blk + 1, bj == blk ? bi : bj);
      w = u.transpose() * e * u;
      if (w(blk, blk + 1) < 0) swap_cols(u, blk, blk + 1);
      w = u.transpose() * e * u;
      const Integer d = as_int(w(blk, blk + 1));

      bool dirty = false;
      for (std::size_t r = blk + 2; r < n; ++r) {
        Integer q = floor_div(as_int(w(blk, r)), d);
        if (q != 0) add_col(u, r, blk + 1, -q);
        w = u.transpose() * e * u;
        Integer q2 = floor_div(as_int(w(blk + 1, r)), d);
        if (q2 != 0) add_col(u, r, blk, q2);
        w = u.transpose() * e * u;
        if (w(blk, r) != 0 || w(blk + 1, r) != 0) dirty = true;
      }
      if (dirty) continue;

      bool divisible = true;
      for (std::size_t r = blk + 2; r < n && divisible; ++r)
        for (std::size_t s = r + 1; s < n; ++s)
          if (as_int(w(r, s)) % d != 0) {
            add_col(u, blk, r, 1);
            divisible = false;
            break;
          }
      if (!divisible) continue;
      ds.push_back(d);
      break;
    }
  }
  // (p1, q1, p2, q2) -> (p1, p2, q1, q2)
  RatMatrix out(n, n, Rational(0));
  const std::size_t order[4] = {0, 2, 1, 3};
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) out(r, c) = u(r, order[c]);
  FrobeniusForm res{{ds[0], ds[1]}, out};
  if (!(out.transpose() * e * out == standard_alternating(ds[0], ds[1])))
    throw std::logic_error("symplectic reduction failed to reach normal form");
  return res;
}

}  // namespace g2qm
