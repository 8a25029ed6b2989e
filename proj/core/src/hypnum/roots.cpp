#include <algorithm>
#include <cmath>

#include "g2qm/hypnum/periods.hpp"

namespace g2qm {
namespace {

using boost::multiprecision::cos;
using boost::multiprecision::sin;

BigComplex cplx(const Real& re, const Real& im, int digits) { return {re, im, digits}; }

// Cauchy bound on the root moduli.
Real root_bound(const PolyC& f) {
  Real lead = f.leading().abs();
  Real m = 0;
  for (int i = 0; i < f.degree(); ++i) m = std::max(m, f[i].abs() / lead);
  return 1 + m;
}

void aberth(const PolyC& f, std::vector<BigComplex>& z, int digits) {
  const int n = f.degree();
  PolyC df = f.derivative();
  const Real stop = pow10(-(kStorageDigits - 10));
  for (int iter = 0; iter < 2000; ++iter) {
    Real worst = 0;
    for (int k = 0; k < n; ++k) {
      BigComplex ratio = f(z[k]) / df(z[k]);
      BigComplex s(digits);
      for (int j = 0; j < n; ++j)
        if (j != k) s += (z[k] - z[j]).inverse();
      BigComplex step = ratio / (cplx(1, 0, digits) - ratio * s);
      z[k] -= step;
      worst = std::max(worst, step.abs() / std::max(Real(1), z[k].abs()));
    }
    if (worst < stop) return;
  }
}

}  // namespace

BranchPoints find_roots(const PolyC& f, int digits) {
  checked_digits(digits);
  const int n = f.degree();
  if (n != 5 && n != 6) throw std::invalid_argument("branch points need degree 5 or 6");
  Real r = root_bound(f) / 2;
  std::vector<BigComplex> z;
  for (int k = 0; k < n; ++k) {
    // off-axis start keeps real inputs from collapsing onto the real line
    Real ang = 2 * pi_real() * k / n + Real(4) / 10;
    z.push_back(cplx(r * cos(ang), r * sin(ang), digits));
  }
  aberth(f, z, digits);
  PolyC df = f.derivative();
  for (auto& x : z)
    for (int i = 0; i < 3; ++i) x -= f(x) / df(x);

  BranchPoints bp;
  bp.digits = digits;
  bp.leading = f.leading();
  bp.infinity = n == 5;
  Real scale = 0;
  for (const auto& c : f.coeffs()) scale = std::max(scale, c.abs());
  for (const auto& x : z) {
    Real res = f(x).abs() / scale;
    bp.max_residual = std::max(bp.max_residual, res);
  }
  if (bp.max_residual > pow10(-digits + 10))
    throw NumericalFailure("root finding did not converge, relative residual " +
                           to_string(bp.max_residual, 6));
  // real parts closer than the working tolerance count as equal
  const Real tie = pow10(-digits / 2);
  std::sort(z.begin(), z.end(), [&tie](const BigComplex& a, const BigComplex& b) {
    Real d = a.re() - b.re();
    if (boost::multiprecision::abs(d) > tie) return d < 0;
    return a.im() < b.im();
  });
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((z[i] - z[j]).abs() < pow10(-digits + 10))
        throw NumericalFailure("branch points are not separated at this precision");
  bp.roots = std::move(z);
  return bp;
}

BranchPoints find_roots(const CurveModel& c, int digits) {
  return find_roots(embed(c.poly(), digits), digits);
}

}  // namespace g2qm
