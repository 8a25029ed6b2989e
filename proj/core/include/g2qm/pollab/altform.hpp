#pragma once

#include "g2qm/exactfield/matrix.hpp"

namespace g2qm {

struct PolarizationType {
  Integer d1{1};
  Integer d2{1};
  bool principal() const { return d1 == 1 && d2 == 1; }
  friend bool operator==(const PolarizationType&, const PolarizationType&) = default;
  std::string str() const { return "(" + d1.str() + ", " + d2.str() + ")"; }
};

struct FrobeniusForm {
  PolarizationType type;
  RatMatrix change;  // unimodular U with U^T E U = [[0, D], [-D, 0]], D = diag(d1, d2)
};

// E(x, y) = x^T E y on Z^4.
RatMatrix standard_alternating(const Integer& d1, const Integer& d2);
inline RatMatrix standard_symplectic() { return standard_alternating(1, 1); }
Rational pfaffian(const RatMatrix& e);

// Symplectic elimination over Z; E must be integral, alternating and nondegenerate.
FrobeniusForm frobenius_type(const RatMatrix& e);

bool is_unimodular(const RatMatrix& u);
bool is_symplectic(const RatMatrix& u, const RatMatrix& e);

}  // namespace g2qm
