#pragma once

#include <array>
#include <string>

#include "g2qm/exactfield/rational.hpp"

namespace g2qm {

// (a, b / Q): i^2 = a, j^2 = b, k = ij = -ji.
struct QuatAlgebra {
  Rational a;
  Rational b;

  QuatAlgebra(Rational a_, Rational b_);
  friend bool operator==(const QuatAlgebra& x, const QuatAlgebra& y) {
    return x.a == y.a && x.b == y.b;
  }
  std::string str() const;
};

class Quaternion {
 public:
  explicit Quaternion(const QuatAlgebra& alg);
  Quaternion(const QuatAlgebra& alg, Rational x0, Rational x1 = 0, Rational x2 = 0, Rational x3 = 0);
  Quaternion(const QuatAlgebra& alg, const std::array<Rational, 4>& x);

  const QuatAlgebra& algebra() const { return alg_; }
  const Rational& operator[](int i) const { return x_[i]; }
  const std::array<Rational, 4>& coords() const { return x_; }

  Quaternion conj() const;
  Rational nrd() const;
  Rational trd() const { return 2 * x_[0]; }
  Quaternion inverse() const;
  bool is_zero() const;

  Quaternion& operator+=(const Quaternion& o);
  Quaternion& operator-=(const Quaternion& o);
  Quaternion& operator*=(const Rational& s);
  friend Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
  friend Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }
  friend Quaternion operator*(Quaternion x, const Rational& s) { return x *= s; }
  friend Quaternion operator*(const Rational& s, Quaternion x) { return x *= s; }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y);
  Quaternion operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Quaternion& x, const Quaternion& y) {
    return x.alg_ == y.alg_ && x.x_ == y.x_;
  }

  std::string str() const;

 private:
  void check_same(const Quaternion& o) const;
  QuatAlgebra alg_;
  std::array<Rational, 4> x_;
};

inline Rational reduced_norm(const Quaternion& x) { return x.nrd(); }
inline Rational reduced_trace(const Quaternion& x) { return x.trd(); }
Quaternion quat_mul(const Quaternion& x, const Quaternion& y);

}  // namespace g2qm
