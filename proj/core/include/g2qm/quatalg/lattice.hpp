#pragma once

#include <vector>

#include "g2qm/exactfield/matrix.hpp"

namespace g2qm {

using RatVec = std::vector<Rational>;
using IntVec = std::vector<Integer>;

// Z-basis (echelon form) of the Z-span of rational generators.
std::vector<RatVec> lattice_basis(const std::vector<RatVec>& generators);
// Z-basis of {c in Z^n : A c = 0}.
std::vector<IntVec> integer_kernel(const RatMatrix& a);

// Unimodular reduction helpers shared with the polarization code.
struct ExtGcd {
  Integer g, s, t;  // g = s*a + t*b, g >= 0
};
ExtGcd ext_gcd(const Integer& a, const Integer& b);

}  // namespace g2qm
