#include "g2qm/endodetect/endodetect.hpp"

#include "g2qm/hypnum/periods.hpp"
#include "g2qm/quatalg/hilbert.hpp"
#include "g2qm/quatalg/lattice.hpp"

namespace g2qm {
namespace {

// Rational c with m = c * I, if any.
std::optional<Rational> scalar_value(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != 0) return std::nullopt;
  for (std::size_t i = 1; i < m.rows(); ++i)
    if (m(i, i) != m(0, 0)) return std::nullopt;
  return m(0, 0);
}

Integer coefficient_denominators(const QFMatrix& t) {
  Integer l = 1;
  for (const auto& x : t.data()) l = lcm(lcm(l, den(x.a())), den(x.b()));
  return l;
}

}  // namespace

std::optional<HomologyAction> analytic_to_homology(const CMatrix& omega, const QFMatrix& t,
                                                   const ReconstructConfig& cfg) {
  const int digits = checked_digits(cfg.digits);
  if (omega.rows() != 2 || omega.cols() != 4 || t.rows() != 2 || t.cols() != 2)
    throw std::invalid_argument("need a 2x4 period matrix and a 2x2 analytic action");
  CMatrix tomega = embed(t, digits).transpose() * omega;
  RealMatrix a(4, 4), b(4, 4);
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      a(r, c) = omega(r, c).re();
      a(r + 2, c) = omega(r, c).im();
      b(r, c) = tomega(r, c).re();
      b(r + 2, c) = tomega(r, c).im();
    }
  auto sol = solve(a, b);
  if (!sol || sol->condition > pow10(digits / 2))
    throw NumericalFailure("stacked period matrix is ill-conditioned" +
                           (sol ? ", condition " + to_string(sol->condition, 6) : std::string()));
  const Real tol = cfg.tolerance();
  RatMatrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      auto q = rational_reconstruct(sol->x(r, c), cfg.max_denominator, tol);
      if (!q) return std::nullopt;
      m(r, c) = *q;
    }
  Real scale = max_abs(omega);
  Real res = max_abs(tomega - omega * to_complex(m, digits)) / scale;
  if (res > tol) return std::nullopt;
  return HomologyAction{std::move(m), res, sol->condition};
}

bool is_integral_endomorphism(const RatMatrix& m) { return is_integral(m); }

RatMatrix QuatAction::action(const Quaternion& x) const {
  return rat_identity(4) * x[0] + mi * x[1] + mj * x[2] + mk() * x[3];
}

QuatAction make_quat_action(RatMatrix mi, RatMatrix mj) {
  if (!is_integral(mi) || !is_integral(mj))
    throw std::invalid_argument("generator actions must be integral");
  auto a = scalar_value(mi * mi);
  auto b = scalar_value(mj * mj);
  if (!a || !b || *a == 0 || *b == 0)
    throw std::invalid_argument("generators must square to nonzero scalars");
  if (!(mi * mj == -(mj * mi))) throw std::invalid_argument("generators must anticommute");
  return {QuatAlgebra(*a, *b), std::move(mi), std::move(mj)};
}

QuatAction detect_generators(const CMatrix& omega, const QFMatrix& ti, const QFMatrix& tj,
                             const ReconstructConfig& cfg) {
  auto mi = analytic_to_homology(omega, ti, cfg);
  auto mj = analytic_to_homology(omega, tj, cfg);
  if (!mi || !mj) throw std::invalid_argument("a generator is not an endomorphism of these periods");
  return make_quat_action(mi->m, mj->m);
}

long default_denominator_bound(const QuatAlgebra& alg, const QFMatrix& ti, const QFMatrix& tj) {
  Integer d = reduced_discriminant(alg);
  Integer l = lcm(coefficient_denominators(ti), coefficient_denominators(tj));
  return (2 * d * l).convert_to<long>();
}

OrderScan scan_order(const QuatAction& g, long bound) {
  if (bound < 1) throw std::invalid_argument("denominator bound must be positive");
  std::array<std::array<long, 16>, 4> gens;
  std::array<RatMatrix, 4> mats{rat_identity(4), g.mi, g.mj, g.mk()};
  for (int s = 0; s < 4; ++s)
    for (int e = 0; e < 16; ++e) gens[s][e] = num(mats[s](e / 4, e % 4)).convert_to<long>();

  std::vector<RatVec> found;
  for (int s = 0; s < 4; ++s) {
    RatVec v(4, Rational(0));
    v[s] = 1;
    found.push_back(v);
  }
  std::size_t passed = 0;
  for (long n = 2; n <= bound; ++n) {
    if (bound % n) continue;
    std::array<long, 4> x{};
    for (long idx = 0; idx < n * n * n * n; ++idx) {
      long rest = idx;
      for (int s = 0; s < 4; ++s) {
        x[s] = rest % n;
        rest /= n;
      }
      bool ok = true;
      for (int e = 0; e < 16 && ok; ++e) {
        long acc = 0;
        for (int s = 0; s < 4; ++s) acc += x[s] * gens[s][e];
        ok = acc % n == 0;
      }
      if (!ok || idx == 0) continue;
      ++passed;
      found.push_back({Rational(x[0], n), Rational(x[1], n), Rational(x[2], n), Rational(x[3], n)});
    }
  }
  std::vector<Quaternion> basis;
  for (const auto& v : lattice_basis(found)) basis.emplace_back(g.algebra, v[0], v[1], v[2], v[3]);
  QuatOrder o(g.algebra, std::move(basis));
  OrderScan out{o, order_discriminant(o), is_maximal(o), bound, passed};
  return out;
}

RatMatrix rosati(const RatMatrix& m, const RatMatrix& e) {
  auto einv = inverse(e);
  if (!einv) throw std::invalid_argument("Riemann form is singular");
  return *einv * m.transpose() * e;
}

QuatInvolution rosati_involution(const QuatAction& g, const RatMatrix& e) {
  std::array<RatMatrix, 4> mats{rat_identity(4), g.mi, g.mj, g.mk()};
  RatMatrix a(16, 4);
  for (int s = 0; s < 4; ++s)
    for (int k = 0; k < 16; ++k) a(k, s) = mats[s](k / 4, k % 4);
  RatMatrix at = a.transpose();
  RatMatrix s(4, 4);
  for (int c = 0; c < 4; ++c) {
    RatMatrix img = rosati(mats[c], e);
    RatMatrix rhs(16, 1);
    for (int k = 0; k < 16; ++k) rhs(k, 0) = img(k / 4, k % 4);
    auto x = solve(at * a, at * rhs);
    if (!x || !(a * *x == rhs))
      throw std::invalid_argument("Rosati involution does not preserve the quaternion action");
    for (int r = 0; r < 4; ++r) s(r, c) = (*x)(r, 0);
  }
  return QuatInvolution(std::move(s));
}

}  // namespace g2qm
