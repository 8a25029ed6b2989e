#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "g2qm/quatalg/hilbert.hpp"

using namespace g2qm;

namespace {

constexpr int P = 60;

const PeriodMatrix& ref_pm() {
  static PeriodMatrix pm = build_period_matrix(fixtures::curve_243(), fixtures::ref_loops(), P);
  return pm;
}

ReconstructConfig cfg() {
  ReconstructConfig c;
  c.digits = P;
  return c;
}

RatMatrix scalar(long c) { return rat_identity(4) * Rational(c); }

QFMatrix qf_sum(const QFMatrix& a, const QFMatrix& b) {
  QFMatrix s = a;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) s(r, c) = a(r, c) + b(r, c);
  return s;
}

QFMatrix qf_prod(const QFMatrix& a, const QFMatrix& b) {
  QFMatrix p(2, 2, QuadElem(-3));
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c)
      for (std::size_t k = 0; k < 2; ++k) p(r, c) += a(r, k) * b(k, c);
  return p;
}

}  // namespace

TEST(AnalyticToHomology, GeneratorsAreIntegralWithExactRelations) {
  auto m6 = analytic_to_homology(ref_pm().omega, fixtures::t_six(), cfg());
  auto m3 = analytic_to_homology(ref_pm().omega, fixtures::t_minus_three(), cfg());
  ASSERT_TRUE(m6 && m3);
  EXPECT_TRUE(is_integral(m6->m));
  EXPECT_TRUE(is_integral(m3->m));
  EXPECT_EQ(m6->m * m6->m, scalar(6));
  EXPECT_EQ(m3->m * m3->m, scalar(-3));
  EXPECT_EQ(m6->m * m3->m, -(m3->m * m6->m));
  EXPECT_LT(m6->residual, pow10(-P + 15));
}

TEST(AnalyticToHomology, PrintedMatricesViolateTheirOwnRelations) {
  // the displayed matrices each carry one wrong row; the computed ones satisfy M^2 = c
  EXPECT_NE(fixtures::ref_m_six() * fixtures::ref_m_six(), scalar(6));
  EXPECT_NE(fixtures::ref_m_minus_three() * fixtures::ref_m_minus_three(), scalar(-3));
  auto g = detect_generators(ref_pm().omega, fixtures::t_six(), fixtures::t_minus_three(), cfg());
  int rows_off_6 = 0, rows_off_3 = 0;
  for (int r = 0; r < 4; ++r) {
    bool same6 = true, same3 = true;
    for (int c = 0; c < 4; ++c) {
      same6 = same6 && g.mi(r, c) == fixtures::ref_m_six()(r, c);
      same3 = same3 && g.mj(r, c) == fixtures::ref_m_minus_three()(r, c);
    }
    rows_off_6 += !same6;
    rows_off_3 += !same3;
  }
  EXPECT_EQ(rows_off_6, 1);
  EXPECT_EQ(rows_off_3, 1);
}

TEST(AnalyticToHomology, IdentityAndLinearity) {
  const auto& om = ref_pm().omega;
  QFMatrix one{{fixtures::qf(1, 0, 1), fixtures::qf(0, 0, 1)}, {fixtures::qf(0, 0, 1), fixtures::qf(1, 0, 1)}};
  auto id = analytic_to_homology(om, one, cfg());
  ASSERT_TRUE(id);
  EXPECT_EQ(id->m, rat_identity(4));
  auto a = analytic_to_homology(om, fixtures::t_six(), cfg());
  auto b = analytic_to_homology(om, fixtures::t_minus_three(), cfg());
  auto s = analytic_to_homology(om, qf_sum(fixtures::t_six(), fixtures::t_minus_three()), cfg());
  auto p = analytic_to_homology(om, qf_prod(fixtures::t_six(), fixtures::t_minus_three()), cfg());
  ASSERT_TRUE(a && b && s && p);
  EXPECT_EQ(s->m, a->m + b->m);
  // T^t Omega = Omega M reverses products
  EXPECT_EQ(p->m, b->m * a->m);
}

TEST(AnalyticToHomology, NonEndomorphismIsRejected) {
  QFMatrix t{{fixtures::qf(1, 0, 1), fixtures::qf(0, 0, 1)}, {fixtures::qf(0, 0, 1), fixtures::qf(2, 0, 1)}};
  EXPECT_FALSE(analytic_to_homology(ref_pm().omega, t, cfg()));
  QFMatrix half{{fixtures::qf(1, 0, 2), fixtures::qf(0, 0, 1)}, {fixtures::qf(0, 0, 1), fixtures::qf(1, 0, 2)}};
  auto h = analytic_to_homology(ref_pm().omega, half, cfg());
  ASSERT_TRUE(h);
  EXPECT_FALSE(is_integral_endomorphism(h->m));
}

TEST(QuatActionTest, RejectsBrokenRelations) {
  EXPECT_THROW(make_quat_action(fixtures::ref_m_six(), fixtures::ref_m_minus_three()), std::invalid_argument);
  auto g = detect_generators(ref_pm().omega, fixtures::t_six(), fixtures::t_minus_three(), cfg());
  EXPECT_EQ(g.algebra, QuatAlgebra(6, -3));
  EXPECT_EQ(g.mk() * g.mk(), scalar(18));
}

TEST(OrderScan, RecoversMaximalOrderOfDiscriminantSix) {
  auto g = detect_generators(ref_pm().omega, fixtures::t_six(), fixtures::t_minus_three(), cfg());
  long bound = default_denominator_bound(g.algebra, fixtures::t_six(), fixtures::t_minus_three());
  auto scan = scan_order(g, bound);
  EXPECT_EQ(scan.discriminant, 6);
  EXPECT_TRUE(scan.maximal);
  EXPECT_EQ(reduced_discriminant(g.algebra), 6);
  for (const auto& x : scan.order.basis()) EXPECT_TRUE(is_integral(g.action(x)));
}

TEST(Rosati, InvolutionAndAntiHomomorphism) {
  auto g = detect_generators(ref_pm().omega, fixtures::t_six(), fixtures::t_minus_three(), cfg());
  const RatMatrix& e = ref_pm().form;
  for (const RatMatrix& m : {g.mi, g.mj, g.mk(), g.mi + g.mj * Rational(3)}) {
    EXPECT_EQ(rosati(rosati(m, e), e), m);
    EXPECT_EQ(e * rosati(m, e), m.transpose() * e);
  }
  EXPECT_EQ(rosati(g.mi * g.mj, e), rosati(g.mj, e) * rosati(g.mi, e));
  auto inv = rosati_involution(g, e);
  QuatAlgebra h = g.algebra;
  for (auto x : {Quaternion(h, 1, 2, -1, 3), Quaternion(h, 0, 1, 1, 0), Quaternion(h, 5, 0, 0, 1)}) {
    EXPECT_EQ(g.action(inv.apply(x)), rosati(g.action(x), e));
    EXPECT_GT((x * inv.apply(x)).trd(), 0);  // positivity
  }
}
