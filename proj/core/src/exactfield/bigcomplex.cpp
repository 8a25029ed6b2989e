#include "g2qm/exactfield/bigcomplex.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace g2qm {

int checked_digits(int digits) {
  if (digits < kMinDigits || digits > kMaxDigits)
    throw std::invalid_argument("precision must lie in [" + std::to_string(kMinDigits) + ", " +
                                std::to_string(kMaxDigits) + "] digits");
  return digits;
}

Real to_real(const Rational& q) {
  return Real(num(q)) / Real(den(q));
}

Rational exact_rational(const Real& x) {
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, x.backend().data());
  Rational r{q};
  mpq_clear(q);
  return r;
}

Real pow10(int e) { return boost::multiprecision::pow(Real(10), e); }

Real pi_real() { return boost::math::constants::pi<Real>(); }

std::string to_string(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

BigComplex::BigComplex(int digits) : digits_(digits) {}

BigComplex::BigComplex(Real re, Real im, int digits)
    : re_(std::move(re)), im_(std::move(im)), digits_(digits) {}

BigComplex BigComplex::from_rational(const Rational& re, const Rational& im, int digits) {
  return {to_real(re), to_real(im), digits};
}

Real BigComplex::abs() const { return boost::multiprecision::sqrt(norm()); }

BigComplex BigComplex::sqrt() const {
  // principal branch, cut along the negative real axis
  Real r = abs();
  if (r == 0) return BigComplex(digits_);
  Real u = boost::multiprecision::sqrt((r + boost::multiprecision::abs(re_)) / 2);
  if (re_ >= 0) return {u, im_ / (2 * u), digits_};
  Real v = im_ >= 0 ? u : Real(-u);
  return {boost::multiprecision::abs(im_) / (2 * u), v, digits_};
}

BigComplex BigComplex::exp() const {
  Real m = boost::multiprecision::exp(re_);
  return {m * boost::multiprecision::cos(im_), m * boost::multiprecision::sin(im_), digits_};
}

BigComplex BigComplex::inverse() const {
  Real n = norm();
  if (n == 0) throw std::domain_error("inverse of complex zero");
  return {re_ / n, -im_ / n, digits_};
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  digits_ = std::min(digits_, o.digits_);
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  digits_ = std::min(digits_, o.digits_);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  Real r = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  digits_ = std::min(digits_, o.digits_);
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) { return *this *= o.inverse(); }

std::string BigComplex::str(int digits) const {
  int d = digits > 0 ? digits : digits_;
  std::string s = to_string(re_, d);
  std::string t = to_string(boost::multiprecision::abs(im_), d);
  return s + (im_ < 0 ? " - " : " + ") + t + "*I";
}

std::ostream& operator<<(std::ostream& os, const BigComplex& z) { return os << z.str(); }

}  // namespace g2qm
