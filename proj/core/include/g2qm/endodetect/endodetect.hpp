#pragma once

#include <optional>

#include "g2qm/exactfield/matrix.hpp"
#include "g2qm/quatalg/order.hpp"
#include "g2qm/quatalg/symmetric.hpp"

namespace g2qm {

// Integral-or-not homology matrix M with T^t Omega = Omega M.
struct HomologyAction {
  RatMatrix m;
  Real residual{0};   // |T^t Omega - Omega M| / |Omega|
  Real condition{0};  // of the stacked (Re; Im) period matrix
};

// Nullopt when reconstruction or the exact back-substitution fails (not a correspondence).
// Throws NumericalFailure when the stacked period matrix is too ill-conditioned.
std::optional<HomologyAction> analytic_to_homology(const CMatrix& omega, const QFMatrix& t,
                                                   const ReconstructConfig& cfg);

bool is_integral_endomorphism(const RatMatrix& m);

// Homology action of a quaternion algebra (a, b) given by images of i and j; k acts by Mi Mj.
struct QuatAction {
  QuatAlgebra algebra;
  RatMatrix mi;
  RatMatrix mj;

  RatMatrix mk() const { return mi * mj; }
  RatMatrix action(const Quaternion& x) const;
};

// Checks Mi^2 = a, Mj^2 = b, Mi Mj = -Mj Mi and integrality; throws otherwise.
QuatAction make_quat_action(RatMatrix mi, RatMatrix mj);

// Runs analytic_to_homology on both generators and validates the relations.
QuatAction detect_generators(const CMatrix& omega, const QFMatrix& ti, const QFMatrix& tj,
                             const ReconstructConfig& cfg);

struct OrderScan {
  QuatOrder order;
  Integer discriminant;
  bool maximal{false};
  long bound{0};
  std::size_t passed{0};  // candidates (x0 + x1 i + x2 j + x3 k)/n with integral action
};

// 2 * D * (coefficient denominators of the analytic generators).
long default_denominator_bound(const QuatAlgebra& alg, const QFMatrix& ti, const QFMatrix& tj);

// All (x0 + x1 i + x2 j + x3 k)/n, n | bound, acting integrally.
OrderScan scan_order(const QuatAction& g, long bound);

// E^-1 M^t E: the adjoint of M for E(x, y) = x^t E y.
RatMatrix rosati(const RatMatrix& m, const RatMatrix& e);

// Rosati involution transported to (1, i, j, k) coordinates.
QuatInvolution rosati_involution(const QuatAction& g, const RatMatrix& e);

}  // namespace g2qm
