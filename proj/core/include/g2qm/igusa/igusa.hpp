#pragma once

#include <array>
#include <optional>

#include "g2qm/hypnum/curve.hpp"
#include "g2qm/hypnum/periods.hpp"

namespace g2qm {

template <class T>
struct IgusaClebsch {
  T i2, i4, i6, i10;
};

struct SingularModel : std::domain_error {
  using std::domain_error::domain_error;
};

// Transvectant formulas on the binary sextic attached to f (degree 5 counts as a sextic
// with a root at infinity).  Exact over Q(sqrt(delta)); the complex version is the same
// algebra in floating point.
IgusaClebsch<QuadElem> igusa_clebsch(const PolyQF& f);
IgusaClebsch<BigComplex> igusa_clebsch(const PolyC& f);

// Oracle from root differences: sums over pairings and triple splits, discriminant product.
IgusaClebsch<BigComplex> igusa_clebsch_roots(const BranchPoints& bp);

// (I2^5 / I10, I2^3 I4 / I10, I2^2 I6 / I10); throws SingularModel when I10 = 0.
std::array<QuadElem, 3> absolute_invariants(const IgusaClebsch<QuadElem>& ic);
std::array<BigComplex, 3> absolute_invariants(const IgusaClebsch<BigComplex>& ic);

struct InvariantTuple {
  IgusaClebsch<QuadElem> exact;
  std::array<QuadElem, 3> absolute;
  IgusaClebsch<BigComplex> numeric;  // root route, for cross-checking
  std::array<BigComplex, 3> absolute_numeric;
};

InvariantTuple igusa_invariants(const CurveModel& c, int digits);

// Equality in weighted projective space with weights (1, 2, 3, 5).
bool same_invariants(const IgusaClebsch<QuadElem>& a, const IgusaClebsch<QuadElem>& b);
bool same_invariants(const IgusaClebsch<BigComplex>& a, const IgusaClebsch<BigComplex>& b,
                     int digits);
bool same_invariants(const CurveModel& a, const CurveModel& b);

CurveModel conjugate_curve(const CurveModel& c);

// (c X + d)^6 f((a X + b)/(c X + d)): the model after X -> (aX + b)/(cX + d).
template <class T>
Poly<T> transform_sextic(const Poly<T>& f, const T& a, const T& b, const T& c, const T& d) {
  return mobius_transform(f, 6, a, b, c, d);
}

}  // namespace g2qm
