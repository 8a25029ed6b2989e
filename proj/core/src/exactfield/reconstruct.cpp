#include <stdexcept>

#include "g2qm/exactfield/quadfield.hpp"

namespace g2qm {

std::optional<Rational> rational_reconstruct(const Real& x, const Integer& max_denominator,
                                             const Real& tolerance) {
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  // Expand the exact binary value of x; its convergents are those of x itself.
  Rational r = exact_rational(x);
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Integer n = num(r), d = den(r);
  while (d != 0) {
    Integer a = floor_div(n, d);
    Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_denominator) break;
    Rational c(p2, q2);
    if (boost::multiprecision::abs(x - to_real(c)) < tolerance) return c;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    Integer rem = n - a * d;
    n = d;
    d = rem;
  }
  return std::nullopt;
}

std::optional<QuadElem> recognize_qf_element(const BigComplex& x, long delta,
                                             const Integer& max_denominator,
                                             const Real& tolerance) {
  // Split the budget so the recombined value stays within tolerance.
  auto a = rational_reconstruct(x.re(), max_denominator, tolerance / 2);
  if (!a) return std::nullopt;
  if (delta > 0) {
    if (boost::multiprecision::abs(x.im()) >= tolerance) return std::nullopt;
    return QuadElem(*a, delta);
  }
  Real s = boost::multiprecision::sqrt(Real(-delta));
  auto b = rational_reconstruct(x.im() / s, max_denominator, tolerance / (2 * s));
  if (!b) return std::nullopt;
  QuadElem out(*a, *b, delta);
  BigComplex back = out.embed(x.digits());
  if ((back - x).abs() >= tolerance) return std::nullopt;
  return out;
}

}  // namespace g2qm
