#pragma once

#include "g2qm/exactfield/bigcomplex.hpp"
#include "g2qm/exactfield/quadfield.hpp"

namespace g2qm {

// Lets generic polynomial code build constants in the same field as a sample element.
template <class T>
struct FieldTraits;

template <>
struct FieldTraits<QuadElem> {
  static QuadElem zero(const QuadElem& like) { return QuadElem(like.delta()); }
  static QuadElem from_rational(const QuadElem& like, const Rational& q) {
    return QuadElem(q, like.delta());
  }
  static bool is_zero(const QuadElem& x) { return x.is_zero(); }
};

template <>
struct FieldTraits<BigComplex> {
  static BigComplex zero(const BigComplex& like) { return BigComplex(like.digits()); }
  static BigComplex from_rational(const BigComplex& like, const Rational& q) {
    return BigComplex::from_rational(q, 0, like.digits());
  }
  static bool is_zero(const BigComplex& x) { return x.is_zero(); }
};

template <class T>
T field_zero(const T& like) { return FieldTraits<T>::zero(like); }
template <class T>
T field_const(const T& like, const Rational& q) { return FieldTraits<T>::from_rational(like, q); }

}  // namespace g2qm
