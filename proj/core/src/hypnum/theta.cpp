#include "g2qm/hypnum/theta.hpp"

#include <cmath>

namespace g2qm {
namespace {

using boost::multiprecision::floor;
using boost::multiprecision::sqrt;

long to_long(const Real& x) { return static_cast<long>(x.convert_to<double>()); }

long round_long(const Real& x) { return to_long(floor(x + Real(1) / 2)); }

RatMatrix blocks(const RatMatrix& a, const RatMatrix& b, const RatMatrix& c, const RatMatrix& d) {
  RatMatrix m(4, 4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      m(i, j) = a(i, j);
      m(i, j + 2) = b(i, j);
      m(i + 2, j) = c(i, j);
      m(i + 2, j + 2) = d(i, j);
    }
  return m;
}

// Gauss reduction of the binary form Y; returns U with U^T Y U reduced.
RatMatrix gauss_reduce(Real y11, Real y12, Real y22) {
  RatMatrix u = rat_identity(2);
  for (int iter = 0; iter < 1000; ++iter) {
    long q = round_long(y12 / y11);
    if (q != 0) {
      // column 2 -= q * column 1
      y22 = y22 - 2 * q * y12 + q * q * y11;
      y12 = y12 - q * y11;
      for (std::size_t i = 0; i < 2; ++i) u(i, 1) -= q * u(i, 0);
    }
    if (y22 < y11) {
      std::swap(y11, y22);
      for (std::size_t i = 0; i < 2; ++i) std::swap(u(i, 0), u(i, 1));
      continue;
    }
    break;
  }
  return u;
}

}  // namespace

std::vector<ThetaChar> all_characteristics() {
  std::vector<ThetaChar> out;
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2)
      for (int b1 = 0; b1 < 2; ++b1)
        for (int b2 = 0; b2 < 2; ++b2) out.push_back({{a1, a2, b1, b2}});
  return out;
}

std::vector<ThetaChar> even_characteristics() {
  std::vector<ThetaChar> out;
  for (const auto& c : all_characteristics())
    if (c.even()) out.push_back(c);
  return out;
}

BigComplex theta_constant(const ThetaChar& ch, const SmallPeriodMatrix& st, int digits) {
  checked_digits(digits);
  for (int v : ch.c)
    if (v != 0 && v != 1) throw std::invalid_argument("characteristic entries must be 0 or 1");
  if (!ch.even()) return BigComplex(digits);
  const CMatrix& tau = st.tau;
  const Real y11 = tau(0, 0).im(), y12 = tau(0, 1).im(), y22 = tau(1, 1).im();
  const Real det = y11 * y22 - y12 * y12;
  if (!(y11 > 0 && det > 0)) throw std::invalid_argument("Im tau is not positive definite");

  // Terms with pi v^T Y v > T are below 10^-P e^-10 and are dropped.
  const Real pi = pi_real();
  const Real bound = (digits * boost::multiprecision::log(Real(10)) + 10) / pi;
  const Real a1 = Real(ch.c[0]) / 2, a2 = Real(ch.c[1]) / 2;
  const Real b1 = Real(ch.c[2]) / 2, b2 = Real(ch.c[3]) / 2;
  const BigComplex ipi(Real(0), pi, digits);

  BigComplex sum(digits);
  Real r2 = sqrt(bound * y11 / det);
  long lo2 = to_long(floor(-r2 - a2)), hi2 = to_long(floor(r2 - a2)) + 1;
  for (long n2 = lo2; n2 <= hi2; ++n2) {
    Real v2 = n2 + a2;
    Real rest = bound - v2 * v2 * det / y11;
    if (rest < 0) continue;
    Real c1 = -y12 * v2 / y11;
    Real r1 = sqrt(rest / y11);
    long lo1 = to_long(floor(c1 - r1 - a1)), hi1 = to_long(floor(c1 + r1 - a1)) + 1;
    for (long n1 = lo1; n1 <= hi1; ++n1) {
      Real v1 = n1 + a1;
      BigComplex q = tau(0, 0) * (v1 * v1) + tau(0, 1) * (2 * v1 * v2) + tau(1, 1) * (v2 * v2);
      q += BigComplex(2 * (v1 * b1 + v2 * b2), Real(0), digits);
      sum += (q * ipi).exp();
    }
  }
  return sum;
}

SiegelReduced siegel_reduce(const SmallPeriodMatrix& in, int max_rounds) {
  CMatrix tau = in.tau;
  RatMatrix total = rat_identity(4);
  RatMatrix zero(2, 2), id = rat_identity(2);
  auto apply = [&](const RatMatrix& m) {
    tau = symplectic_action(m, tau);
    BigComplex avg = (tau(0, 1) + tau(1, 0)) * Real(Real(1) / 2);
    tau(0, 1) = tau(1, 0) = avg;
    total = m * total;
  };
  for (int round = 0; round < max_rounds; ++round) {
    RatMatrix u = gauss_reduce(tau(0, 0).im(), tau(0, 1).im(), tau(1, 1).im());
    if (u != id) apply(blocks(u.transpose(), zero, zero, *inverse(u)));

    RatMatrix b(2, 2);
    b(0, 0) = -round_long(tau(0, 0).re());
    b(0, 1) = b(1, 0) = -round_long(tau(0, 1).re());
    b(1, 1) = -round_long(tau(1, 1).re());
    if (b != zero) apply(blocks(id, b, zero, id));

    if (tau(0, 0).abs() >= 1) return {{tau}, total};
    RatMatrix a(2, 2), bb(2, 2), c(2, 2), d(2, 2);
    a(1, 1) = 1;
    bb(0, 0) = -1;
    c(0, 0) = 1;
    d(1, 1) = 1;
    apply(blocks(a, bb, c, d));
  }
  throw NumericalFailure("Siegel reduction did not terminate");
}

}  // namespace g2qm
