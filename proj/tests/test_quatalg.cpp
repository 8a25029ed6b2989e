#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "g2qm/quatalg/classnumber.hpp"
#include "g2qm/quatalg/hilbert.hpp"
#include "g2qm/quatalg/lattice.hpp"
#include "g2qm/quatalg/symmetric.hpp"
#include "oracle/oracles.hpp"

using namespace g2qm;

TEST(Quaternion, MultiplicationTable) {
  QuatAlgebra h(6, -3);
  Quaternion i(h, 0, 1), j(h, 0, 0, 1), k(h, 0, 0, 0, 1);
  EXPECT_EQ(i * i, Quaternion(h, 6));
  EXPECT_EQ(j * j, Quaternion(h, -3));
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(k * k, Quaternion(h, 18));
  Quaternion g(h, 2, Rational(1, 2), 0, Rational(-1, 6));
  EXPECT_EQ(g.nrd(), Rational(2));  // reduced norm 2 element of the level 243 example
  EXPECT_EQ(g * g.inverse(), Quaternion(h, 1));
  EXPECT_THROW(Quaternion(h, 1) + Quaternion(QuatAlgebra(7, -1), 1), std::invalid_argument);
}

TEST(Hilbert, AgreesWithBruteForceOracle) {
  for (long a : {-7, -3, -1, 2, 3, 5, 6, 10, 14, 21})
    for (long b : {-5, -3, -2, -1, 3, 7, 11})
      for (long p : {0L, 2L, 3L, 5L, 7L})
        EXPECT_EQ(hilbert_symbol(a, b, p), oracle::hilbert(a, b, p)) << a << " " << b << " " << p;
}

TEST(Hilbert, RationalArgumentsUseSquareClasses) {
  EXPECT_EQ(hilbert_symbol(Rational(6, 25), Rational(-3, 4), 2), hilbert_symbol(6, -3, 2));
  EXPECT_EQ(hilbert_symbol(Rational(2, 3), -1, 3), hilbert_symbol(6, -1, 3));
}

TEST(Ramification, AlgebrasOfTheLevel243972And1568Surfaces) {
  // (m, delta) pairs listed in the table of quaternionic surfaces
  EXPECT_EQ(ramified_primes(QuatAlgebra(6, -3)), (std::vector<long>{2, 3}));
  EXPECT_EQ(ramified_primes(QuatAlgebra(2, -3)), (std::vector<long>{2, 3}));
  EXPECT_EQ(ramified_primes(QuatAlgebra(7, -1)), (std::vector<long>{2, 7}));
  EXPECT_EQ(reduced_discriminant(QuatAlgebra(10, -3)), 10);
  EXPECT_EQ(reduced_discriminant(QuatAlgebra(11, -1)), 22);
  EXPECT_TRUE(ramification(QuatAlgebra(1, 1)).finite.empty());
  EXPECT_TRUE(ramification(QuatAlgebra(-1, -1)).definite());
  EXPECT_THROW(reduced_discriminant(QuatAlgebra(-1, -1)), std::domain_error);
  EXPECT_TRUE(algebras_isomorphic(QuatAlgebra(6, -3), QuatAlgebra(2, -3)));
}

TEST(Orders, ReferenceOrdersMaximalityAndIndex) {
  auto o243 = fixtures::order_243();
  EXPECT_EQ(order_discriminant(o243), 6);
  EXPECT_TRUE(is_maximal(o243));
  auto o1568 = fixtures::order_1568();
  EXPECT_EQ(order_discriminant(o1568), 14);
  EXPECT_TRUE(is_maximal(o1568));
  // index 3 in a maximal order
  auto o972 = fixtures::order_972();
  EXPECT_EQ(order_discriminant(o972), 18);
  EXPECT_FALSE(is_maximal(o972));
}

TEST(Orders, RejectsNonOrders) {
  QuatAlgebra h(6, -3);
  // not closed under multiplication: (i/2)^2 = 3/2
  EXPECT_THROW(QuatOrder(h, {Quaternion(h, 1), Quaternion(h, 0, Rational(1, 2)), Quaternion(h, 0, 0, 1),
                             Quaternion(h, 0, 0, 0, 1)}),
               std::invalid_argument);
  Quaternion x = fixtures::order_243().element({1, 1, 1, 1});
  EXPECT_TRUE(fixtures::order_243().contains(x));
  EXPECT_FALSE(fixtures::order_243().contains(Quaternion(h, 0, 0, 0, Rational(1, 6))));
}

TEST(ClassNumber, AgreesWithAnalyticFormulaOracle) {
  for (long d = -3; d >= -400; --d) {
    if (((d % 4) + 4) % 4 > 1) continue;
    EXPECT_EQ(class_number(d), oracle::class_number(d)) << d;
    EXPECT_EQ(class_number_by_reduction(d), class_number(d)) << d;
  }
  EXPECT_EQ(class_number(-4 * 6), 2);
  EXPECT_EQ(class_number(-4 * 14), 4);
  EXPECT_EQ(class_number(-163), 1);
}

TEST(ClassNumber, ReductionIsIdempotentAndPreservesDiscriminant) {
  for (BQForm f : {BQForm{7, 13, 11}, BQForm{3, 2, 100}, BQForm{61, 97, 39}}) {
    BQForm r = reduce_form(f);
    EXPECT_EQ(r.discriminant(), f.discriminant());
    EXPECT_EQ(reduce_form(r), r);
    EXPECT_LE(std::labs(r.b), r.a);
    EXPECT_LE(r.a, r.c);
  }
}

TEST(PrincipalCount, RotgerCountsFromTheTables) {
  EXPECT_EQ(pi_principal_count(6), 1);
  EXPECT_EQ(pi_principal_count(10), 1);
  EXPECT_EQ(pi_principal_count(14), 2);
  EXPECT_EQ(pi_principal_count(22), 1);
  EXPECT_THROW(pi_principal_count(30), std::invalid_argument);  // odd number of primes
  EXPECT_THROW(pi_principal_count(12), std::invalid_argument);
}

TEST(Symmetric, RosatiFixedSublatticeOfMaximalOrder) {
  auto o = fixtures::order_243();
  auto inv = QuatInvolution::from_j_sign(-1);
  auto sym = symmetric_sublattice(o, inv);
  EXPECT_EQ(sym.size(), 3u);
  for (const auto& x : sym) {
    EXPECT_EQ(inv.apply(x), x);
    EXPECT_TRUE(o.contains(x));
  }
}

TEST(Symmetric, PositiveNormTwoClassesOfLevel243Order) {
  auto o = fixtures::order_243();
  auto inv = QuatInvolution::from_j_sign(-1);
  EnumerateOptions opts;
  opts.expected_classes = 1;
  auto res = enumerate_positive_norm_d(o, inv, 2, opts);
  ASSERT_TRUE(res.certified);
  ASSERT_EQ(res.classes.size(), 1u);
  for (const auto& x : res.classes[0]) {
    EXPECT_EQ(x.nrd(), 2);
    EXPECT_TRUE(is_totally_positive_symmetric(x));
  }
}

TEST(Lattice, KernelAndBasis) {
  RatMatrix a = rat_from_ints({{1, 2, 3}});
  auto ker = integer_kernel(a);
  EXPECT_EQ(ker.size(), 2u);
  for (const auto& v : ker) EXPECT_EQ(v[0] + 2 * v[1] + 3 * v[2], 0);
  auto b = lattice_basis({{Rational(1, 2), 0}, {0, 1}, {Rational(1, 2), 1}});
  EXPECT_EQ(b.size(), 2u);
}
