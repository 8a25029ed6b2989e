#pragma once

#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "g2qm/exactfield/field_traits.hpp"

namespace g2qm {

// Dense univariate polynomial, coefficients in ascending degree.  The zero
// polynomial keeps a single zero coefficient so the field context survives.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
    trim();
  }
  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  // c * (X - r)
  static Poly linear_factor(const T& r, const T& c) { return Poly({-(c * r), c}); }

  const std::vector<T>& coeffs() const { return c_; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_zero(c_[0]); }
  int degree() const { return is_zero() ? -1 : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && FieldTraits<T>::is_zero(c_[0]); }
  const T& leading() const { return c_.back(); }
  T zero() const { return field_zero(c_[0]); }

  T operator()(const T& x) const {
    T acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() == 1) return constant(zero());
    std::vector<T> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * field_const(c_[0], Rational(i)));
    return Poly(std::move(d));
  }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, a.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(Poly a, const T& s) {
    for (auto& x : a.c_) x = x * s;
    a.trim();
    return a;
  }
  friend Poly operator*(const T& s, Poly a) { return std::move(a) * s; }
  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // Quotient and remainder; the leading coefficient of d must be invertible.
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly r = *this;
    int dq = degree() - d.degree();
    if (dq < 0) return {constant(zero()), r};
    std::vector<T> q(dq + 1, zero());
    T inv = field_const(c_[0], Rational(1)) / d.leading();
    for (int k = dq; k >= 0; --k) {
      T coef = r.coeff(k + d.degree()) * inv;
      q[k] = coef;
      for (int j = 0; j <= d.degree(); ++j) r.c_[k + j] -= coef * d.c_[j];
    }
    r.trim();
    return {Poly(std::move(q)), r};
  }

  Poly monic() const { return *this * (field_const(c_[0], Rational(1)) / leading()); }

  template <class F>
  auto map(F f) const {
    using U = std::decay_t<decltype(f(std::declval<const T&>()))>;
    std::vector<U> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(f(x));
    return Poly<U>(std::move(out));
  }

 private:
  void trim() {
    while (c_.size() > 1 && FieldTraits<T>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using PolyQF = Poly<QuadElem>;
using PolyC = Poly<BigComplex>;

template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

// (c X + d)^n f((a X + b)/(c X + d)) for the formal degree n.
template <class T>
Poly<T> mobius_transform(const Poly<T>& f, int n, const T& a, const T& b, const T& c,
                         const T& d) {
  Poly<T> num({b, a});
  Poly<T> den({d, c});
  Poly<T> acc = Poly<T>::constant(f.zero());
  for (int k = 0; k <= n; ++k) {
    Poly<T> term = Poly<T>::constant(f.coeff(k));
    for (int i = 0; i < k; ++i) term = term * num;
    for (int i = k; i < n; ++i) term = term * den;
    acc += term;
  }
  return acc;
}

inline PolyC embed(const PolyQF& f, int digits) {
  return f.map([digits](const QuadElem& x) { return x.embed(digits); });
}

std::string to_string(const PolyQF& f, const std::string& var = "X");

}  // namespace g2qm
