#include "fixtures.hpp"

namespace fixtures {

std::string data_path(const std::string& name) { return std::string(G2QM_DATA_DIR) + "/" + name; }

QuadElem qf(long a, long b, long d, long delta) { return QuadElem(Rational(a, d), Rational(b, d), delta); }

CurveModel curve_243() {
  return CurveModel(PolyQF({qf(-2, 1, 324), qf(15, 1, 108), qf(-11, -7, 18), qf(14, 46, 27), qf(12, -28, 9),
                            qf(-8, 8, 3), qf(12, -8, 9)}),
                    "C");
}

PolyQF ref_g() {
  return PolyQF({qf(-3, 2, 243), qf(8, 0, 27), qf(4 * -9, 4 * -5, 27), qf(4 * 7, 4 * 23, 27), qf(2 * 5, 2 * -9, 3),
                 qf(2 * -9, 2 * 7, 3), qf(4 * 2, 4 * -1, 3)});
}

std::vector<Loop> ref_loops() { return {{2, 0, -1}, {3, 4, 1}, {0, 1, -1}, {4, 5, -1}}; }

QFMatrix t_six() { return QFMatrix{{qf(0, 0, 1), qf(1, 0, 1)}, {qf(6, 0, 1), qf(0, 0, 1)}}; }

QFMatrix t_minus_three() { return QFMatrix{{qf(0, 1, 1), qf(0, 0, 1)}, {qf(0, 0, 1), qf(0, -1, 1)}}; }

std::vector<std::vector<std::pair<double, double>>> ref_omega() {
  return {{{35.97, -7.80}, {-22.45, 0}, {-12.37, 21.43}, {11.23, -7.80}},
          {{3.36, -7.14}, {-15.73, 0}, {2.25, 3.90}, {7.87, -7.14}}};
}

RatMatrix ref_m_six() { return rat_from_ints({{-2, -2, 1, 0}, {-2, 2, -1, -1}, {-2, 0, 0, -2}, {-2, 2, -4, 0}}); }

RatMatrix ref_m_minus_three() {
  return rat_from_ints({{3, -2, -2, 2}, {2, -3, 0, 2}, {4, 4, -1, 2}, {0, -4, 2, 1}});
}

QuatAlgebra alg_243() { return QuatAlgebra(6, -3); }

QuatOrder order_243() {
  QuatAlgebra a = alg_243();
  return QuatOrder(a, {Quaternion(a, 1), Quaternion(a, 0, Rational(1, 2), 0, Rational(1, 6)),
                       Quaternion(a, Rational(1, 2), 0, Rational(1, 2), 0), Quaternion(a, 0, 0, 0, Rational(1, 3))});
}

QuatOrder order_972() {
  QuatAlgebra a(2, -3);
  return QuatOrder(a, {Quaternion(a, 1), Quaternion(a, 0, Rational(3, 2), 0, Rational(1, 2)),
                       Quaternion(a, Rational(1, 2), 0, Rational(1, 2), 0), Quaternion(a, 0, 0, 0, 1)});
}

QuatOrder order_1568() {
  QuatAlgebra a(7, -1);
  Rational h(1, 2);
  return QuatOrder(a, {Quaternion(a, 1), Quaternion(a, h, h, h, h), Quaternion(a, 0, 0, 1), Quaternion(a, 0, 0, 0, 1)});
}

QMLattice lattice_af243() {
  auto mi = rat_from_ints({{0, -2, 0, -2}, {-1, 0, 1, 0}, {0, 4, 0, -2}, {-2, 0, -1, 0}});
  auto mj = rat_from_ints({{-1, 0, -2, 0}, {0, -1, 0, 2}, {2, 0, 1, 0}, {0, -2, 0, 1}});
  auto e = rat_from_ints({{0, 0, 1, 0}, {0, 0, 0, 2}, {-1, 0, 0, 0}, {0, -2, 0, 0}});
  return QMLattice{order_243(), make_quat_action(mi, mj), e, "A_f 243"};
}

RatMatrix ref_e_gamma() { return rat_from_ints({{0, -1, 1, 1}, {1, 0, 1, 2}, {-1, -1, 0, 0}, {-1, -2, 0, 0}}); }

RatMatrix ref_m_symplectic() {
  return rat_from_ints({{0, 1, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 1}, {0, -1, 0, -1}});
}

CurveModel curve_1568_c1() { return read_curve_file(data_path("curve_1568_c1.json")).curve; }

}  // namespace fixtures
