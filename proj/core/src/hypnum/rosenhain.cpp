#include <algorithm>

#include "g2qm/hypnum/theta.hpp"

namespace g2qm {

RosenhainModel rosenhain_reconstruct(const SmallPeriodMatrix& tau, int digits) {
  checked_digits(digits);
  SiegelReduced red = siegel_reduce(tau);
  Real biggest = 0;
  std::vector<std::pair<ThetaChar, BigComplex>> th;
  for (const auto& ch : even_characteristics()) {
    th.emplace_back(ch, theta_constant(ch, red.tau, digits));
    biggest = std::max(biggest, th.back().second.abs());
  }
  for (const auto& [ch, v] : th)
    if (v.abs() < pow10(-digits / 2) * biggest)
      throw DecomposableSurface("even theta constant [" + std::to_string(ch.c[0]) +
                                std::to_string(ch.c[1]) + ";" + std::to_string(ch.c[2]) +
                                std::to_string(ch.c[3]) +
                                "] vanishes: the surface is a product of elliptic curves");
  auto sq = [&](int a1, int a2, int b1, int b2) {
    ThetaChar want{{a1, a2, b1, b2}};
    for (const auto& [ch, v] : th)
      if (ch == want) return v * v;
    throw std::logic_error("missing theta characteristic");
  };
  BigComplex t0000 = sq(0, 0, 0, 0), t0001 = sq(0, 0, 0, 1), t0100 = sq(0, 1, 0, 0);
  BigComplex t1000 = sq(1, 0, 0, 0), t1001 = sq(1, 0, 0, 1), t1100 = sq(1, 1, 0, 0);

  RosenhainModel out;
  out.lambda = {t0000 * t0001 / (t1000 * t1001), t0000 * t0100 / (t1000 * t1100),
                t0001 * t0100 / (t1001 * t1100)};
  BigComplex one(Real(1), Real(0), digits), zero(digits);
  PolyC f({zero, one});
  f = f * PolyC::linear_factor(one, one);
  for (const auto& l : out.lambda) f = f * PolyC::linear_factor(l, one);
  out.poly = f;
  return out;
}

}  // namespace g2qm
