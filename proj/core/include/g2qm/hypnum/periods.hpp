#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "g2qm/exactfield/matrix.hpp"
#include "g2qm/hypnum/curve.hpp"

namespace g2qm {

struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BranchPoints {
  std::vector<BigComplex> roots;  // sorted by (re, im)
  bool infinity{false};           // degree-5 model: the sixth branch point is at infinity
  BigComplex leading;
  Real max_residual{0};
  int digits{kDefaultDigits};
};

// Aberth iteration plus Newton polish.  The exact overload also checks squarefreeness.
BranchPoints find_roots(const PolyC& f, int digits);
BranchPoints find_roots(const CurveModel& c, int digits);

struct SegmentIntegral {
  BigComplex dx;   // integral of dX/Y
  BigComplex xdx;  // integral of X dX/Y
  int nodes{0};
};

// Straight segment from roots[from] to roots[to]; Y is fixed at the midpoint by the
// principal square root and continued along the path.
SegmentIntegral integrate_segment(const BranchPoints& bp, int from, int to, int digits);
BigComplex integrate_period(const BranchPoints& bp, int from, int to, int differential, int digits);

struct Loop {
  int from;
  int to;
  int sign{1};  // orientation of the lift, part of the basis metadata
  friend bool operator==(const Loop&, const Loop&) = default;
};

struct HomologyBasis {
  std::vector<Loop> loops;
  RatMatrix intersection;  // E(x, y) = x^T E y on the loop basis
};

struct PeriodMatrix {
  CMatrix omega;           // 2x4: rows dX/Y, X dX/Y; columns = loops * change
  HomologyBasis basis;
  RatMatrix change;        // columns in terms of the loops
  RatMatrix form;          // change^T * intersection * change
  int digits{kDefaultDigits};
};

struct RiemannResiduals {
  Real relation;     // max entry of Omega E^-1 Omega^T
  Real scale;        // max |Omega|^2
  Real min_eigen;    // smallest eigenvalue of -i Omega E^-1 conj(Omega)^T
  bool positive{false};
  bool holds(int digits) const;
};

RiemannResiduals validate_riemann(const CMatrix& omega, const RatMatrix& e, int digits);

// Intersection numbers of segment loops: magnitudes from shared endpoints, signs fixed
// by the bilinear relations.  Throws when segments cross.
HomologyBasis intersection_basis(const BranchPoints& bp, std::vector<Loop> loops,
                                 const CMatrix& loop_periods, int digits);

// Loop periods (2 x segment integral x sign) for the given loops.
CMatrix loop_periods(const BranchPoints& bp, const std::vector<Loop>& loops, int digits);

// With loops == nullopt the chain (x1,x2),(x2,x3),(x3,x4),(x4,x5) is used and then
// reduced to a symplectic basis.
PeriodMatrix build_period_matrix(const BranchPoints& bp, std::optional<std::vector<Loop>> loops,
                                 int digits);
PeriodMatrix build_period_matrix(const CurveModel& c, std::optional<std::vector<Loop>> loops,
                                 int digits);

// Symplectic version of pm (form becomes the standard J); throws for non-principal forms.
PeriodMatrix symplectic_period_matrix(const PeriodMatrix& pm);

struct SmallPeriodMatrix {
  CMatrix tau;  // 2x2
};

SmallPeriodMatrix small_period_matrix(const CMatrix& omega_symplectic, int digits);

// (A tau + B)(C tau + D)^-1
CMatrix symplectic_action(const RatMatrix& m, const CMatrix& tau);

}  // namespace g2qm
