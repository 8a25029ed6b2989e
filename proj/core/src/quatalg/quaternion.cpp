#include "g2qm/quatalg/quaternion.hpp"

#include <stdexcept>

namespace g2qm {

QuatAlgebra::QuatAlgebra(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a == 0 || b == 0) throw std::invalid_argument("quaternion algebra parameters must be nonzero");
}

std::string QuatAlgebra::str() const { return "(" + to_string(a) + ", " + to_string(b) + ")"; }

Quaternion::Quaternion(const QuatAlgebra& alg) : alg_(alg), x_{0, 0, 0, 0} {}

Quaternion::Quaternion(const QuatAlgebra& alg, Rational x0, Rational x1, Rational x2, Rational x3)
    : alg_(alg), x_{std::move(x0), std::move(x1), std::move(x2), std::move(x3)} {}

Quaternion::Quaternion(const QuatAlgebra& alg, const std::array<Rational, 4>& x)
    : alg_(alg), x_(x) {}

void Quaternion::check_same(const Quaternion& o) const {
  if (!(alg_ == o.alg_))
    throw std::invalid_argument("quaternions from different algebras " + alg_.str() + " and " +
                                o.alg_.str());
}

Quaternion Quaternion::conj() const { return {alg_, x_[0], -x_[1], -x_[2], -x_[3]}; }

Rational Quaternion::nrd() const {
  const Rational& a = alg_.a;
  const Rational& b = alg_.b;
  return x_[0] * x_[0] - a * x_[1] * x_[1] - b * x_[2] * x_[2] + a * b * x_[3] * x_[3];
}

Quaternion Quaternion::inverse() const {
  Rational n = nrd();
  if (n == 0) throw std::domain_error("quaternion " + str() + " has zero reduced norm");
  return conj() * (Rational(1) / n);
}

bool Quaternion::is_zero() const {
  return x_[0] == 0 && x_[1] == 0 && x_[2] == 0 && x_[3] == 0;
}

Quaternion& Quaternion::operator+=(const Quaternion& o) {
  check_same(o);
  for (int i = 0; i < 4; ++i) x_[i] += o.x_[i];
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& o) {
  check_same(o);
  for (int i = 0; i < 4; ++i) x_[i] -= o.x_[i];
  return *this;
}

Quaternion& Quaternion::operator*=(const Rational& s) {
  for (auto& v : x_) v *= s;
  return *this;
}

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  x.check_same(y);
  const Rational& a = x.alg_.a;
  const Rational& b = x.alg_.b;
  const auto& p = x.x_;
  const auto& q = y.x_;
  return {x.alg_,
          p[0] * q[0] + a * p[1] * q[1] + b * p[2] * q[2] - a * b * p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] - b * p[2] * q[3] + b * p[3] * q[2],
          p[0] * q[2] + p[2] * q[0] + a * p[1] * q[3] - a * p[3] * q[1],
          p[0] * q[3] + p[3] * q[0] + p[1] * q[2] - p[2] * q[1]};
}

Quaternion quat_mul(const Quaternion& x, const Quaternion& y) { return x * y; }

std::string Quaternion::str() const {
  static const char* units[4] = {"", "i", "j", "k"};
  std::string out;
  for (int t = 0; t < 4; ++t) {
    if (x_[t] == 0) continue;
    Rational c = x_[t];
    bool neg = c < 0;
    if (neg) c = -c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (t == 0)
      out += to_string(c);
    else if (c == 1)
      out += units[t];
    else
      out += to_string(c) + "*" + units[t];
  }
  return out.empty() ? "0" : out;
}

}  // namespace g2qm
