#pragma once

#include <iosfwd>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "g2qm/exactfield/rational.hpp"

namespace g2qm {

// Storage precision is fixed at compile time; the working precision P (decimal
// digits) only drives tolerances and convergence targets.
inline constexpr int kStorageDigits = 160;
inline constexpr int kMinDigits = 30;
inline constexpr int kMaxDigits = 140;
inline constexpr int kDefaultDigits = 60;

using Real = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<kStorageDigits>,
    boost::multiprecision::et_off>;

int checked_digits(int digits);
Real to_real(const Rational& q);
Rational exact_rational(const Real& x);
Real pow10(int e);
Real pi_real();
std::string to_string(const Real& x, int digits);

class BigComplex {
 public:
  BigComplex() = default;
  explicit BigComplex(int digits);
  BigComplex(Real re, Real im, int digits);
  static BigComplex from_rational(const Rational& re, const Rational& im, int digits);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  int digits() const { return digits_; }

  BigComplex conj() const { return {re_, -im_, digits_}; }
  Real norm() const { return re_ * re_ + im_ * im_; }
  Real abs() const;
  BigComplex sqrt() const;
  BigComplex exp() const;
  BigComplex inverse() const;
  bool is_zero() const { return re_ == 0 && im_ == 0; }

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(BigComplex a, const BigComplex& b) { return a *= b; }
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const Real& s) {
    a.re_ *= s;
    a.im_ *= s;
    return a;
  }
  friend BigComplex operator*(const Real& s, BigComplex a) { return a * s; }
  BigComplex operator-() const { return {-re_, -im_, digits_}; }
  friend bool operator==(const BigComplex& a, const BigComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string str(int digits = -1) const;

 private:
  Real re_{0};
  Real im_{0};
  int digits_{kDefaultDigits};
};

std::ostream& operator<<(std::ostream& os, const BigComplex& z);

inline Real abs(const BigComplex& z) { return z.abs(); }
inline BigComplex conj(const BigComplex& z) { return z.conj(); }

}  // namespace g2qm
