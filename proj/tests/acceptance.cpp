// One PASS/FAIL line per acceptance criterion.  Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "fixtures.hpp"
#include "g2qm/hypnum/theta.hpp"
#include "g2qm/igusa/igusa.hpp"
#include "g2qm/pollab/altform.hpp"
#include "g2qm/quatalg/classnumber.hpp"
#include "g2qm/richelot/richelot.hpp"
#include "property_checks.hpp"

using namespace g2qm;
using fixtures::qf;

namespace {

constexpr int P = 60;

struct Check {
  std::vector<std::string> notes;
  bool pass{true};
  void expect(bool ok, const std::string& what) {
    notes.push_back((ok ? "ok " : "FAILED ") + what);
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int n, const std::string& title, double budget_s, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget_s > 0) {
    std::ostringstream os;
    os << "runtime " << secs << " s < " << budget_s << " s";
    c.expect(secs < budget_s, os.str());
  }
  std::printf("%s criterion %d: %s (%.2f s)\n", c.pass ? "PASS" : "FAIL", n, title.c_str(), secs);
  for (const auto& s : c.notes) std::printf("    %s\n", s.c_str());
  std::fflush(stdout);
  if (!c.pass) ++failures;
}

std::string num(const Real& x) { return to_string(x, 3); }

ReconstructConfig config() {
  ReconstructConfig c;
  c.digits = P;
  return c;
}

int class_of(const PrincipalSearch& ps, const Quaternion& x) {
  for (std::size_t c = 0; c < ps.classes.classes.size(); ++c)
    for (const auto& y : ps.classes.classes[c])
      if (y == x) return static_cast<int>(c);
  return -1;
}

// |a - b| / |b| or |a + b| / |b|, whichever is smaller
Real signed_rel(const BigComplex& a, const BigComplex& b) {
  Real s = b.abs();
  return std::min((a - b).abs(), (a + b).abs()) / (s == 0 ? Real(1) : s);
}

QuadElem gi(long a, long b) { return QuadElem(a, b, -1); }

}  // namespace

int main() {
  const auto curve = fixtures::curve_243();
  const std::array<std::pair<int, int>, 3> pairs{{{0, 2}, {1, 5}, {3, 4}}};

  criterion(1, "Richelot step for the grouping (x1,x3)(x2,x6)(x4,x5)", 1.0, [&](Check& c) {
    auto bp = find_roots(curve, P);
    auto g = make_grouping(curve, bp, pairs, config());
    c.expect(g.exact, "grouping certified exact over Q(sqrt(-3))");
    auto img = richelot_step(g, curve.poly().leading());
    c.expect(img.g == fixtures::ref_g(), "all seven coefficients of G equal the displayed ones");
    c.expect(img.delta == qf(1, 0, 6), "Delta = 1/6 (computed " + img.delta.str() + ")");
  });

  criterion(2, "Igusa invariants", 10.0, [&](Check& c) {
    Rational i1 = Rational(Integer(30371007954944)) / 27;
    std::array<QuadElem, 3> want{QuadElem(i1, -3), QuadElem(Rational(846901248), -3), QuadElem(Rational(283161088), -3)};
    auto inv = igusa_invariants(curve, P);
    c.expect(inv.absolute == want, "F: (2^18 41^5 / 3^3, 2^12 3 41^3, 2^9 7 41^2 47)");
    c.expect(igusa_invariants(CurveModel(fixtures::ref_g()), P).absolute == want, "Richelot image G has the same");
    QuadElem one_i = gi(1, 1), two_i = gi(2, 1);
    std::array<QuadElem, 3> shown{one_i.pow(14) * gi(-7, 8).pow(5) * gi(28, 5).pow(5) / two_i.pow(12),
                                  one_i.pow(10) * gi(3, 10).pow(2) * gi(7, -8).pow(3) * gi(28, 5).pow(3) / two_i.pow(8),
                                  one_i.pow(12) * gi(-2, 3) * gi(8, 7).pow(2) * gi(28, 5).pow(2) * gi(320, 1383) /
                                      two_i.pow(8)};
    auto c1 = igusa_invariants(fixtures::curve_1568_c1(), P).absolute;
    bool conj = true;
    for (int k = 0; k < 3; ++k) conj = conj && c1[k] == shown[k].conj();
    c.expect(c1 == shown, std::string("C1 matches the displayed Gaussian-rational triple") +
                              (conj ? " (computed triple is its complex conjugate)" : ""));
  });

  criterion(3, "Endomorphism detection on the level 243 curve", 30.0, [&](Check& c) {
    auto pm = build_period_matrix(curve, fixtures::ref_loops(), P);
    auto cfg = config();
    auto m6 = analytic_to_homology(pm.omega, fixtures::t_six(), cfg);
    auto m3 = analytic_to_homology(pm.omega, fixtures::t_minus_three(), cfg);
    c.expect(m6 && is_integral(m6->m), "T^2 = 6 detected with integral homology matrix");
    c.expect(m3 && is_integral(m3->m), "T^2 = -3 detected with integral homology matrix");
    if (!m6 || !m3) return;
    auto g = make_quat_action(m6->m, m3->m);
    auto scan = scan_order(g, default_denominator_bound(g.algebra, fixtures::t_six(), fixtures::t_minus_three()));
    c.expect(scan.discriminant == 6 && scan.maximal, "order of reduced discriminant 6, maximal");
    c.expect(m6->m == fixtures::ref_m_six(), "M(T6) equals the displayed matrix entrywise");
    c.expect(m3->m == fixtures::ref_m_minus_three(), "M(T-3) equals the displayed matrix entrywise");
    c.expect(fixtures::ref_m_six() * fixtures::ref_m_six() != rat_identity(4) * Rational(6),
             "note: the displayed M(T6) does not square to 6");
    c.expect(fixtures::ref_m_minus_three() * fixtures::ref_m_minus_three() != rat_identity(4) * Rational(-3),
             "note: the displayed M(T-3) does not square to -3");
  });

  criterion(4, "Principal polarization counts and searches", 30.0, [&](Check& c) {
    c.expect(pi_principal_count(6) == 1 && pi_principal_count(10) == 1 && pi_principal_count(14) == 2 &&
                 pi_principal_count(22) == 1,
             "pi(6, 10, 14, 22) = (1, 1, 2, 1)");
    auto timed = [&](const QMLattice& lat) {
      auto t0 = std::chrono::steady_clock::now();
      auto ps = principal_search(lat, rosati_involution(lat.action, lat.form));
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      c.expect(s < 10, lat.label + " search under 10 s (" + std::to_string(s) + " s)");
      return ps;
    };
    auto a = timed(fixtures::lattice_af243());
    QuatAlgebra h6(6, -3);
    c.expect(a.principal.size() == 1 && class_of(a, Quaternion(h6, 2, Rational(1, 2), 0, Rational(-1, 6))) >= 0,
             "level 243: one class, containing 2 + i/2 - k/6");
    auto b = timed(read_lattice_file(fixtures::data_path("af972.json")));
    c.expect(b.principal.empty(), "level 972: no principal polarization");
    auto d = timed(read_lattice_file(fixtures::data_path("af1568.json")));
    QuatAlgebra h14(7, -1);
    int x = class_of(d, Quaternion(h14, 7, 2, 0, 1)), y = class_of(d, Quaternion(h14, 7, -2, 0, 1));
    c.expect(d.principal.size() == 2 && x >= 0 && y >= 0 && x != y,
             "level 1568: two classes, 7 + 2i + k and 7 - 2i + k in different ones");
  });

  criterion(5, "Twisted form and symplectic change for level 243", 0, [&](Check& c) {
    auto lat = fixtures::lattice_af243();
    Quaternion gamma(lat.order.algebra(), 2, Rational(1, 2), 0, Rational(-1, 6));
    RatMatrix eg = twist_form(lat.form, lat.action.action(gamma.inverse()));
    c.expect(eg == fixtures::ref_e_gamma(), "E_gamma entrywise");
    RatMatrix m = fixtures::ref_m_symplectic();
    c.expect(m.transpose() * eg * m == standard_symplectic(), "displayed M takes E_gamma to J");
    auto ff = frobenius_type(eg);
    RatMatrix u = *inverse(ff.change) * m;
    c.expect(ff.type.principal() && is_integral(u) && is_symplectic(u, standard_symplectic()),
             "computed change agrees with M up to Sp4(Z)");
  });

  criterion(6, "Period numerics", 0, [&](Check& c) {
    auto bp = find_roots(curve, P);
    auto pm = build_period_matrix(bp, fixtures::ref_loops(), P);
    auto shown = fixtures::ref_omega();
    Real worst = 0;
    for (int r = 0; r < 2; ++r)
      for (int k = 0; k < 4; ++k) {
        BigComplex w(Real(shown[r][k].first), Real(shown[r][k].second), P);
        worst = std::max(worst, signed_rel(pm.omega(r, k), w));
      }
    c.expect(worst < Real(1e-3), "Omega matches the displayed digits, worst relative error " + num(worst));
    auto rr = validate_riemann(pm.omega, pm.form, P);
    Real rel = rr.relation / rr.scale;
    c.expect(rel < pow10(-45) && rr.positive, "Riemann relations, residual " + num(rel));
    // column structure in terms of alpha, beta and s = sqrt(-3)
    BigComplex al = pm.omega(0, 0), be = pm.omega(1, 0);
    auto q = [](long a, long b, long d) { return qf(a, b, d).embed(P); };
    std::array<std::array<BigComplex, 2>, 3> col{
        {{q(-1, -1, 2) * al - q(3, -1, 1) * be, q(-3, -1, 6) * al - q(1, -1, 2) * be},
         {q(-1, 1, 2) * al + q(3, -1, 2) * be, q(3, 1, 12) * al - q(1, 1, 2) * be},
         {q(3, 1, 2) * be, q(3, -1, 12) * al}}};
    Real eq3 = 0;
    for (int k = 0; k < 3; ++k) {
      // one sign per column
      Real plus = 0, minus = 0;
      for (int r = 0; r < 2; ++r) {
        plus = std::max(plus, (pm.omega(r, k + 1) - col[k][r]).abs() / col[k][r].abs());
        minus = std::max(minus, (pm.omega(r, k + 1) + col[k][r]).abs() / col[k][r].abs());
      }
      eq3 = std::max(eq3, std::min(plus, minus));
    }
    c.expect(eq3 < pow10(-45), "column relations in alpha, beta, residual " + num(eq3));
    auto dst = find_roots(CurveModel(fixtures::ref_g()), P);
    std::vector<PeriodIdentity> ids{{0, 1, 0, 2, -1}, {0, 2, 1, 2, 2},  {1, 5, 2, 3, 2},
                                    {2, 4, 1, 4, 1},  {3, 4, 3, 4, -2}, {4, 5, 3, 5, -1}};
    Real iso = 0;
    for (const auto& r : verify_isogeny_periods(bp, dst, ids, P)) iso = std::max({iso, r.residual[0], r.residual[1]});
    c.expect(iso < pow10(-45), "six isogeny period identities, residual " + num(iso));
  });

  criterion(7, "Rosenhain round trip", 60.0, [&](Check& c) {
    auto pm = build_period_matrix(curve, std::nullopt, P);
    auto red = siegel_reduce(small_period_matrix(pm.omega, P));
    auto model = rosenhain_reconstruct(red.tau, P);
    auto got = absolute_invariants(igusa_clebsch(model.poly));
    auto want = igusa_invariants(curve, P).absolute;
    Real worst = 0;
    for (int k = 0; k < 3; ++k) {
      BigComplex w = want[k].embed(P);
      worst = std::max(worst, (got[k] - w).abs() / w.abs());
    }
    c.expect(worst < pow10(-30), "absolute invariants agree, relative error " + num(worst));
  });

  criterion(8, "Property sweeps", 0, [&](Check& c) {
    auto add = [&](const char* name, const props::Sweep& s) {
      c.expect(s.ok() && s.instances >= 100, std::string(name) + ": " + std::to_string(s.instances) + " instances, " +
                                                 std::to_string(s.failures) + " failures" +
                                                 (s.ok() ? "" : " (" + s.first_failure + ")"));
    };
    add("nrd multiplicativity", props::nrd_multiplicative(101, 200));
    add("Hilbert product formula", props::hilbert_product_formula(102, 200));
    add("even ramification", props::even_ramification(103, 200));
    add("class numbers vs oracle, |disc| <= 2000", props::class_number_oracle(2000));
    add("Rosati involution and anti-homomorphism", props::rosati_identities(104, 150));
    add("GL2 invariance of absolute invariants", props::absolute_invariants_gl2(105, 100));
    add("det(M_gamma) = nrd(gamma)^2", props::det_is_norm_squared(106, 150));
  });

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
