#pragma once

#include <optional>
#include <string>

#include "g2qm/exactfield/bigcomplex.hpp"
#include "g2qm/exactfield/rational.hpp"

namespace g2qm {

// a + b*sqrt(delta) with delta square-free and different from 0 and 1.
class QuadElem {
 public:
  QuadElem() = default;
  explicit QuadElem(long delta);
  QuadElem(Rational a, long delta);
  QuadElem(Rational a, Rational b, long delta);

  static QuadElem sqrt_delta(long delta) { return QuadElem(0, 1, delta); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  long delta() const { return delta_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  QuadElem conj() const { return {a_, -b_, delta_}; }
  Rational norm() const { return a_ * a_ - b_ * b_ * delta_; }
  Rational trace() const { return 2 * a_; }
  QuadElem inverse() const;
  QuadElem pow(int e) const;

  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);
  QuadElem& operator/=(const QuadElem& o);
  QuadElem& operator*=(const Rational& s);

  friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
  friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
  friend QuadElem operator*(QuadElem x, const Rational& s) { return x *= s; }
  friend QuadElem operator*(const Rational& s, QuadElem x) { return x *= s; }
  QuadElem operator-() const { return {-a_, -b_, delta_}; }

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.delta_ == y.delta_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  BigComplex embed(int digits) const;
  std::string str() const;

 private:
  void check_same(const QuadElem& o) const;

  Rational a_{0};
  Rational b_{0};
  long delta_{-1};
};

inline QuadElem conj(const QuadElem& x) { return x.conj(); }

// Fixed embedding: sqrt(delta) -> +i*sqrt(|delta|) for delta < 0, +sqrt(delta) otherwise.
BigComplex embed_sqrt_delta(long delta, int digits);

// Continued-fraction convergents of x; first convergent within tolerance wins.
std::optional<Rational> rational_reconstruct(const Real& x, const Integer& max_denominator,
                                             const Real& tolerance);

// Inverse of QuadElem::embed.  For delta > 0 only rational values are recovered.
std::optional<QuadElem> recognize_qf_element(const BigComplex& x, long delta,
                                             const Integer& max_denominator,
                                             const Real& tolerance);

struct ReconstructConfig {
  Integer max_denominator{100000000};
  int digits{kDefaultDigits};
  Real tolerance() const;  // 10^(-P/2)
};

}  // namespace g2qm
