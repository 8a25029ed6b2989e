#include "g2qm/hypnum/periods.hpp"

#include <algorithm>

#include "g2qm/pollab/altform.hpp"

namespace g2qm {
namespace {

using boost::multiprecision::abs;

BigComplex one(int digits) { return {Real(1), Real(0), digits}; }

// Distance from p to the closed segment [a, b].
Real segment_distance(const BigComplex& p, const BigComplex& a, const BigComplex& b) {
  BigComplex d = b - a;
  BigComplex w = p - a;
  Real t = (w.re() * d.re() + w.im() * d.im()) / d.norm();
  t = std::clamp(t, Real(0), Real(1));
  return (w - d * t).abs();
}

Real cross(const BigComplex& o, const BigComplex& a, const BigComplex& b) {
  return (a.re() - o.re()) * (b.im() - o.im()) - (a.im() - o.im()) * (b.re() - o.re());
}

// Proper crossing of [p1, p2] and [q1, q2] (no shared endpoints).
bool segments_cross(const BigComplex& p1, const BigComplex& p2, const BigComplex& q1,
                    const BigComplex& q2) {
  Real d1 = cross(q1, q2, p1), d2 = cross(q1, q2, p2);
  Real d3 = cross(p1, p2, q1), d4 = cross(p1, p2, q2);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

CMatrix columns(const CMatrix& m, std::size_t c0) {
  CMatrix r(2, 2, BigComplex(m(0, 0).digits()));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) r(i, j) = m(i, c0 + j);
  return r;
}

RatMatrix block(const RatMatrix& m, std::size_t r0, std::size_t c0) {
  RatMatrix b(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) b(i, j) = m(r0 + i, c0 + j);
  return b;
}

}  // namespace

SegmentIntegral integrate_segment(const BranchPoints& bp, int from, int to, int digits) {
  checked_digits(digits);
  const int n = static_cast<int>(bp.roots.size());
  if (from == to || from < 0 || to < 0 || from >= n || to >= n)
    throw std::invalid_argument("segment needs two distinct branch point indices");
  const BigComplex& a = bp.roots[from];
  const BigComplex& b = bp.roots[to];
  const Real half(Real(1) / 2);
  BigComplex m = (a + b) * half;
  BigComplex h = (b - a) * half;

  std::vector<BigComplex> t;
  BigComplex prod = one(digits);
  for (int k = 0; k < n; ++k) {
    if (k == from || k == to) continue;
    const BigComplex& x = bp.roots[k];
    if (segment_distance(x, a, b) < pow10(-digits / 2))
      throw NumericalFailure("segment passes through another branch point");
    prod *= m - x;
    t.push_back(h / (m - x));
  }
  // X = m + h sin(th): the endpoint factors become -h^2 cos^2(th) and cancel against dX.
  BigComplex k0 = (-(bp.leading * prod)).sqrt();
  // Y(m) is the principal root of F(m); the substitution produces h*k0 instead.
  BigComplex ym = (bp.leading * prod * (-(h * h))).sqrt();
  Real eps = (ym / (h * k0)).re() > 0 ? 1 : -1;

  auto sample = [&](const Real& s, BigComplex& acc0, BigComplex& acc1) {
    BigComplex den = k0;
    for (const auto& tk : t) den *= (one(digits) + tk * s).sqrt();
    BigComplex w = den.inverse();
    acc0 += w;
    acc1 += (m + h * s) * w;
  };

  // Periodic trapezoid over a full period covers the segment twice.
  const Real tol = pow10(-digits);
  const Real pi = pi_real();
  BigComplex sum0(digits), sum1(digits);
  int nodes = 32;
  for (int j = 0; j < nodes; ++j) sample(boost::multiprecision::sin(2 * pi * j / nodes), sum0, sum1);
  BigComplex est0 = sum0 * (pi / nodes), est1 = sum1 * (pi / nodes);
  while (true) {
    if (nodes > (1 << 20)) throw NumericalFailure("period quadrature did not converge");
    for (int j = 1; j < 2 * nodes; j += 2)
      sample(boost::multiprecision::sin(pi * j / nodes), sum0, sum1);
    nodes *= 2;
    BigComplex next0 = sum0 * (pi / nodes), next1 = sum1 * (pi / nodes);
    Real d0 = (next0 - est0).abs() / std::max(Real(1), next0.abs());
    Real d1 = (next1 - est1).abs() / std::max(Real(1), next1.abs());
    est0 = next0;
    est1 = next1;
    if (d0 < tol && d1 < tol) break;
  }
  return {est0 * eps, est1 * eps, nodes};
}

BigComplex integrate_period(const BranchPoints& bp, int from, int to, int differential,
                            int digits) {
  if (differential != 0 && differential != 1)
    throw std::invalid_argument("differential index must be 0 or 1");
  auto s = integrate_segment(bp, from, to, digits);
  return differential == 0 ? s.dx : s.xdx;
}

CMatrix loop_periods(const BranchPoints& bp, const std::vector<Loop>& loops, int digits) {
  CMatrix om(2, loops.size(), BigComplex(digits));
  for (std::size_t c = 0; c < loops.size(); ++c) {
    const Loop& l = loops[c];
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("loop sign must be +1 or -1");
    auto s = integrate_segment(bp, l.from, l.to, digits);
    Real f = 2 * l.sign;
    om(0, c) = s.dx * f;
    om(1, c) = s.xdx * f;
  }
  return om;
}

bool RiemannResiduals::holds(int digits) const {
  return relation < pow10(-digits + 15) * scale && positive;
}

RiemannResiduals validate_riemann(const CMatrix& omega, const RatMatrix& e, int digits) {
  if (e.rows() != 4 || e.cols() != 4 || !is_alternating(e))
    throw std::invalid_argument("Riemann form must be a 4x4 alternating matrix");
  auto einv = inverse(e);
  if (!einv) throw std::invalid_argument("Riemann form is singular");
  CMatrix c = to_complex(*einv, digits);
  RiemannResiduals r;
  r.scale = max_abs(omega);
  r.scale *= r.scale;
  r.relation = max_abs(omega * c * omega.transpose());
  BigComplex minus_i(Real(0), Real(-1), digits);
  CMatrix h = (omega * c * conj_transpose(omega)) * minus_i;
  r.min_eigen = min_eigen_hermitian2(h);
  r.positive = r.min_eigen > pow10(-digits / 2) * r.scale;
  return r;
}

HomologyBasis intersection_basis(const BranchPoints& bp, std::vector<Loop> loops,
                                 const CMatrix& periods, int digits) {
  if (loops.size() != 4) throw std::invalid_argument("a homology basis needs four loops");
  std::vector<std::pair<int, int>> touching;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const Loop& p = loops[i];
      const Loop& q = loops[j];
      int shared = (p.from == q.from) + (p.from == q.to) + (p.to == q.from) + (p.to == q.to);
      if (shared == 2) throw std::invalid_argument("two loops enclose the same segment");
      if (shared == 1) {
        touching.emplace_back(i, j);
      } else if (segments_cross(bp.roots[p.from], bp.roots[p.to], bp.roots[q.from],
                                bp.roots[q.to])) {
        throw std::invalid_argument("loop segments cross; choose non-crossing segments");
      }
    }

  // Magnitudes are forced; the signs depend on sheets and orientations, so take the
  // unique pattern compatible with both bilinear relations.
  std::vector<RatMatrix> found;
  for (unsigned mask = 0; mask < (1u << touching.size()); ++mask) {
    RatMatrix e(4, 4);
    for (std::size_t k = 0; k < touching.size(); ++k) {
      auto [i, j] = touching[k];
      int s = (mask >> k) & 1u ? -1 : 1;
      e(i, j) = s;
      e(j, i) = -s;
    }
    if (abs(pfaffian(e)) != 1) continue;
    if (validate_riemann(periods, e, digits).holds(digits)) found.push_back(e);
  }
  if (found.empty())
    throw NumericalFailure("no intersection sign pattern satisfies the Riemann relations");
  if (found.size() > 1)
    throw NumericalFailure("intersection signs are ambiguous for this loop choice");
  return {std::move(loops), found.front()};
}

PeriodMatrix build_period_matrix(const BranchPoints& bp, std::optional<std::vector<Loop>> loops,
                                 int digits) {
  checked_digits(digits);
  const bool automatic = !loops.has_value();
  std::vector<Loop> ls = automatic ? std::vector<Loop>{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}}
                                   : std::move(*loops);
  CMatrix om = loop_periods(bp, ls, digits);
  PeriodMatrix pm;
  pm.digits = digits;
  pm.basis = intersection_basis(bp, std::move(ls), om, digits);
  pm.omega = std::move(om);
  pm.change = rat_identity(4);
  pm.form = pm.basis.intersection;
  if (automatic) pm = symplectic_period_matrix(pm);
  return pm;
}

PeriodMatrix build_period_matrix(const CurveModel& c, std::optional<std::vector<Loop>> loops,
                                 int digits) {
  return build_period_matrix(find_roots(c, digits), std::move(loops), digits);
}

PeriodMatrix symplectic_period_matrix(const PeriodMatrix& pm) {
  FrobeniusForm ff = frobenius_type(pm.form);
  if (!ff.type.principal())
    throw std::invalid_argument("form of type " + ff.type.str() + " is not principal");
  PeriodMatrix out = pm;
  out.omega = pm.omega * to_complex(ff.change, pm.digits);
  out.change = pm.change * ff.change;
  out.form = ff.change.transpose() * pm.form * ff.change;
  return out;
}

SmallPeriodMatrix small_period_matrix(const CMatrix& omega, int digits) {
  if (omega.rows() != 2 || omega.cols() != 4)
    throw std::invalid_argument("period matrix must be 2x4");
  auto ainv = inverse(columns(omega, 0));
  if (!ainv) throw NumericalFailure("first period block is singular");
  CMatrix tau = *ainv * columns(omega, 2);
  Real size = max_abs(tau);
  if ((tau(0, 1) - tau(1, 0)).abs() > pow10(-digits + 15) * size)
    throw std::invalid_argument("basis is not symplectic: tau is not symmetric");
  BigComplex avg = (tau(0, 1) + tau(1, 0)) * Real(Real(1) / 2);
  tau(0, 1) = avg;
  tau(1, 0) = avg;
  const Real& y11 = tau(0, 0).im();
  const Real& y22 = tau(1, 1).im();
  const Real& y12 = tau(0, 1).im();
  if (!(y11 > 0 && y11 * y22 - y12 * y12 > 0))
    throw std::invalid_argument("Im tau is not positive definite");
  return {std::move(tau)};
}

CMatrix symplectic_action(const RatMatrix& m, const CMatrix& tau) {
  if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("symplectic matrix must be 4x4");
  int d = tau(0, 0).digits();
  CMatrix a = to_complex(block(m, 0, 0), d), b = to_complex(block(m, 0, 2), d);
  CMatrix c = to_complex(block(m, 2, 0), d), dd = to_complex(block(m, 2, 2), d);
  auto inv = inverse(c * tau + dd);
  if (!inv) throw NumericalFailure("singular automorphy factor");
  return (a * tau + b) * *inv;
}

}  // namespace g2qm
