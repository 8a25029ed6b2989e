#pragma once

#include <array>
#include <optional>
#include <vector>

#include "g2qm/igusa/igusa.hpp"

namespace g2qm {

struct DegenerateGrouping : std::domain_error {
  using std::domain_error::domain_error;
};

// Three quadratics permuted cyclically by Galois, over L = K[T]/(m): quadratic k is
// p(t_k) + s(t_k) X + a(t_k) X^2 with t_1 = T, t_2 = r(T), t_3 = r(r(T)).
struct CubicPacking {
  std::array<QuadElem, 3> m;    // monic m(T) = T^3 + m[2] T^2 + m[1] T + m[0]
  std::array<PolyQF, 3> coeff;  // p(T), s(T), a(T), degree <= 2
  PolyQF shift;                 // r(T)
};

// A partition of the six branch points into three pairs.  The first quadratic carries
// the leading coefficient of F.
struct QuadraticGrouping {
  std::array<std::pair<int, int>, 3> pairs;  // root indices, sorted
  bool exact{false};                         // Delta and G computable over K
  bool split{false};                         // each quadratic is itself defined over K
  std::array<PolyQF, 3> quadratics;          // valid when split
  std::optional<CubicPacking> packing;       // valid when exact
  std::array<PolyC, 3> numeric;
};

// Canonical order: the first pair holds root 0, the second the smallest remaining root.
std::vector<std::array<std::pair<int, int>, 3>> all_pairings();

// All 15 groupings.  Exactness is certified by multiplying the quadratics back to F over K,
// or inside K[T]/(m) when Galois permutes the three pairs cyclically.
std::vector<QuadraticGrouping> enumerate_groupings(const CurveModel& c, const BranchPoints& bp,
                                                   const ReconstructConfig& cfg);
QuadraticGrouping make_grouping(const CurveModel& c, const BranchPoints& bp,
                                const std::array<std::pair<int, int>, 3>& pairs,
                                const ReconstructConfig& cfg);

template <class T>
struct RichelotImage {
  T delta;
  Poly<T> g;
};

// Delta = det of the coefficient rows of (P, Q, R); G = [Q,R][R,P][P,Q] / Delta with
// [A, B] = A' B - A B'.  Throws DegenerateGrouping when Delta vanishes.
RichelotImage<QuadElem> richelot_step(const std::array<PolyQF, 3>& pqr);
// Exact step for an exact grouping; cyclic ones are computed in K[T]/(m).
RichelotImage<QuadElem> richelot_step(const QuadraticGrouping& g, const QuadElem& leading);
RichelotImage<BigComplex> richelot_step(const std::array<PolyC, 3>& pqr, int digits);

// int_{x_a}^{x_b} X^i dX/Y = factor * int_{x'_p}^{x'_q} X'^i dX'/Y' for i = 0, 1
struct PeriodIdentity {
  int a, b;
  int p, q;
  int factor;  // +-1 or +-2
  friend bool operator==(const PeriodIdentity&, const PeriodIdentity&) = default;
};

struct IdentityResidual {
  PeriodIdentity id;
  std::array<Real, 2> residual;  // relative, per differential
};

std::vector<IdentityResidual> verify_isogeny_periods(const BranchPoints& c, const BranchPoints& image,
                                                     const std::vector<PeriodIdentity>& pairing,
                                                     int digits);

// For each source segment, the target segment and factor matching both differentials.
// Throws NumericalFailure when no segment matches at all.
std::vector<IdentityResidual> discover_isogeny_periods(
    const BranchPoints& c, const BranchPoints& image,
    std::optional<std::vector<std::pair<int, int>>> sources, int digits);

struct RichelotRow {
  QuadraticGrouping grouping;
  std::optional<QuadElem> delta;        // exact groupings only
  BigComplex delta_numeric;
  std::optional<PolyQF> image;
  std::array<BigComplex, 3> absolute;   // of the image
  bool degenerate{false};
  bool self_isogeny{false};             // image has the invariants of the source curve
};

std::vector<RichelotRow> richelot_table(const CurveModel& c, const ReconstructConfig& cfg);

}  // namespace g2qm
