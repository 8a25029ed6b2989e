#pragma once

#include <array>
#include <vector>

#include "g2qm/hypnum/periods.hpp"

namespace g2qm {

// Characteristic [a; b] with entries in {0, 1} standing for halves: (a1, a2, b1, b2).
struct ThetaChar {
  std::array<int, 4> c;
  bool even() const { return (c[0] * c[2] + c[1] * c[3]) % 2 == 0; }
  friend bool operator==(const ThetaChar&, const ThetaChar&) = default;
};

std::vector<ThetaChar> all_characteristics();
std::vector<ThetaChar> even_characteristics();

BigComplex theta_constant(const ThetaChar& ch, const SmallPeriodMatrix& tau, int digits);

struct SiegelReduced {
  SmallPeriodMatrix tau;
  RatMatrix transform;  // integral symplectic M with tau = M . tau_in
};

// Lattice reduction of Im tau, integral shifts of Re tau and the first-coordinate
// inversion, repeated until |tau_11| >= 1.
SiegelReduced siegel_reduce(const SmallPeriodMatrix& tau, int max_rounds = 200);

struct DecomposableSurface : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RosenhainModel {
  std::array<BigComplex, 3> lambda;
  PolyC poly;  // X (X - 1)(X - l1)(X - l2)(X - l3)
};

RosenhainModel rosenhain_reconstruct(const SmallPeriodMatrix& tau, int digits);

}  // namespace g2qm
