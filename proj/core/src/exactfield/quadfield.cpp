#include "g2qm/exactfield/quadfield.hpp"

#include <stdexcept>

#include "g2qm/exactfield/poly.hpp"

namespace g2qm {

namespace {

long checked_delta(long delta) {
  if (delta == 0 || delta == 1 || !is_squarefree(Integer(delta)))
    throw std::invalid_argument("delta must be square-free and different from 0, 1 (got " +
                                std::to_string(delta) + ")");
  return delta;
}

}  // namespace

QuadElem::QuadElem(long delta) : delta_(checked_delta(delta)) {}
QuadElem::QuadElem(Rational a, long delta) : a_(std::move(a)), delta_(checked_delta(delta)) {}
QuadElem::QuadElem(Rational a, Rational b, long delta)
    : a_(std::move(a)), b_(std::move(b)), delta_(checked_delta(delta)) {}

void QuadElem::check_same(const QuadElem& o) const {
  if (delta_ != o.delta_)
    throw std::invalid_argument("quadratic field mismatch: delta " + std::to_string(delta_) +
                                " vs " + std::to_string(o.delta_));
}

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(sqrt(" + std::to_string(delta_) + "))");
  Rational n = norm();
  return {a_ / n, -b_ / n, delta_};
}

QuadElem QuadElem::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  QuadElem r(1, delta_), base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  check_same(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  check_same(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  check_same(o);
  Rational a = a_ * o.a_ + b_ * o.b_ * delta_;
  b_ = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  return *this;
}

QuadElem& QuadElem::operator/=(const QuadElem& o) {
  check_same(o);
  return *this *= o.inverse();
}

QuadElem& QuadElem::operator*=(const Rational& s) {
  a_ *= s;
  b_ *= s;
  return *this;
}

BigComplex embed_sqrt_delta(long delta, int digits) {
  Real r = boost::multiprecision::sqrt(Real(delta < 0 ? -delta : delta));
  return delta < 0 ? BigComplex(0, r, digits) : BigComplex(r, 0, digits);
}

BigComplex QuadElem::embed(int digits) const {
  BigComplex s = embed_sqrt_delta(delta_, digits);
  return BigComplex::from_rational(a_, 0, digits) + s * to_real(b_);
}

std::string QuadElem::str() const {
  std::string root = "sqrt(" + std::to_string(delta_) + ")";
  if (b_ == 0) return to_string(a_);
  std::string bpart = (b_ == 1) ? root : (b_ == -1) ? "-" + root : to_string(b_) + "*" + root;
  if (a_ == 0) return bpart;
  return "(" + to_string(a_) + (b_ < 0 ? " - " : " + ") +
         ((b_ == 1 || b_ == -1) ? root : to_string(Rational(boost::multiprecision::abs(b_))) + "*" + root) +
         ")";
}

std::string to_string(const PolyQF& f, const std::string& var) {
  std::string out;
  for (int k = f.degree(); k >= 0; --k) {
    if (f[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += f[k].str();
    if (k >= 1) out += "*" + var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

Real ReconstructConfig::tolerance() const { return pow10(-digits / 2); }

}  // namespace g2qm
