#include "g2qm/pollab/polarization.hpp"

#include <set>

#include "g2qm/quatalg/classnumber.hpp"
#include "g2qm/quatalg/hilbert.hpp"

namespace g2qm {

RatMatrix twist_form(const RatMatrix& e, const RatMatrix& mt) {
  RatMatrix left = e * mt;                // E(x, t y)
  RatMatrix right = mt.transpose() * e;   // E(t x, y)
  if (!(left == right) || !is_alternating(left))
    throw std::invalid_argument("endomorphism is not symmetric for this form");
  return left;
}

bool is_polarization(const RatMatrix& e, const CMatrix& omega, int digits) {
  return validate_riemann(omega, e, digits).holds(digits);
}

PeriodMatrix rebase_period_matrix(const PeriodMatrix& pm, const RatMatrix& change) {
  return rebase_period_matrix(pm, change, pm.form);
}

PeriodMatrix rebase_period_matrix(const PeriodMatrix& pm, const RatMatrix& change,
                                  const RatMatrix& form) {
  if (!is_unimodular(change)) throw std::invalid_argument("basis change is not unimodular");
  PeriodMatrix out = pm;
  out.omega = pm.omega * to_complex(change, pm.digits);
  out.change = pm.change * change;
  out.form = change.transpose() * form * change;
  if (!validate_riemann(out.omega, out.form, pm.digits).holds(pm.digits))
    throw NumericalFailure("rebased period matrix fails the Riemann relations");
  return out;
}

bool q_polarizability(long D, long m, long d) {
  if (D < 1 || d < 1) throw std::invalid_argument("D and d must be positive");
  if (!is_squarefree(Integer(m))) throw std::invalid_argument("m must be square-free");
  auto ram = ramified_primes(QuatAlgebra(Rational(-D * d), Rational(m)));
  auto want = prime_factors(Integer(D));
  return std::set<long>(ram.begin(), ram.end()) == std::set<long>(want.begin(), want.end());
}

QMLattice synthetic_lattice(const QuatOrder& o, const Quaternion& mu, std::string label) {
  const auto& b = o.basis();
  Quaternion mu_inv = mu.inverse();
  RatMatrix e(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) e(r, c) = (mu_inv * b[r] * b[c].conj()).trd();
  if (!is_alternating(e)) throw std::invalid_argument("mu must be pure: trd(mu) = 0");
  Integer l = 1, g = 0;
  for (const auto& x : e.data()) l = lcm(l, den(x));
  for (auto& x : e.data()) g = gcd(g, num(x * l));
  if (g == 0) throw std::invalid_argument("degenerate trace form");
  e = e * Rational(l, g);
  // the lattice alone cannot tell E from -E; fix the sign on the first row
  for (std::size_t c = 1; c < 4; ++c)
    if (e(0, c) != 0) {
      if (e(0, c) < 0) e = -e;
      break;
    }

  // i and j need not lie in O, so their matrices may be fractional
  const RatMatrix binv = *inverse(o.basis_matrix());
  auto left = [&](const Quaternion& x) {
    RatMatrix img(4, 4);
    for (int c = 0; c < 4; ++c) {
      Quaternion y = x * b[c];
      for (int r = 0; r < 4; ++r) img(r, c) = y[r];
    }
    return binv * img;
  };
  const QuatAlgebra& alg = o.algebra();
  QuatAction act{alg, left(Quaternion(alg, 0, 1)), left(Quaternion(alg, 0, 0, 1))};
  return {o, std::move(act), std::move(e), std::move(label)};
}

void validate_lattice(const QMLattice& lat) {
  if (lat.form.rows() != 4 || !is_alternating(lat.form) || pfaffian(lat.form) == 0 ||
      !is_integral(lat.form))
    throw std::invalid_argument("lattice form must be integral, alternating and nondegenerate");
  const auto& alg = lat.order.algebra();
  if (!(lat.action.mi * lat.action.mi == rat_identity(4) * alg.a) ||
      !(lat.action.mj * lat.action.mj == rat_identity(4) * alg.b) ||
      !(lat.action.mi * lat.action.mj == -(lat.action.mj * lat.action.mi)))
    throw std::invalid_argument("action matrices do not satisfy the algebra relations");
  for (const auto& x : lat.order.basis())
    if (!is_integral(lat.action.action(x)))
      throw std::invalid_argument("order element " + x.str() + " does not act integrally");
}

PrincipalSearch principal_search(const QMLattice& lat, const QuatInvolution& inv,
                                 const PrincipalSearchOptions& opts) {
  PrincipalSearch out;
  out.start_type = frobenius_type(lat.form).type;
  Integer d = out.start_type.d1 * out.start_type.d2;
  out.norm = d.convert_to<long>();
  EnumerateOptions eo = opts.enumerate;
  if (opts.use_class_number && is_maximal(lat.order)) {
    long disc = order_discriminant(lat.order).convert_to<long>();
    out.expected = pi_principal_count(disc).convert_to<long>();
    eo.expected_classes = out.expected;
  }
  out.classes = enumerate_positive_norm_d(lat.order, inv, out.norm, eo);
  for (const auto& cls : out.classes.classes) {
    PrincipalCandidate pc{cls.front(), cls.size(), {}, false, {}, {}};
    pc.twisted = twist_form(lat.form, lat.action.action(pc.gamma.inverse()));
    pc.integral = is_integral(pc.twisted);
    if (pc.integral) {
      FrobeniusForm ff = frobenius_type(pc.twisted);
      pc.type = ff.type;
      pc.change = ff.change;
    }
    (pc.integral && pc.type.principal() ? out.principal : out.rejected).push_back(std::move(pc));
  }
  out.certified = out.expected.has_value() && out.classes.certified &&
                  static_cast<long>(out.principal.size()) == *out.expected;
  return out;
}

}  // namespace g2qm
