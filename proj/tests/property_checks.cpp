#include "property_checks.hpp"

#include <random>

#include "fixtures.hpp"
#include "g2qm/igusa/igusa.hpp"
#include "g2qm/pollab/altform.hpp"
#include "g2qm/quatalg/classnumber.hpp"
#include "g2qm/quatalg/hilbert.hpp"
#include "oracle/oracles.hpp"

namespace props {

using namespace g2qm;

void Sweep::record(bool pass, const std::string& what) {
  ++instances;
  if (pass) return;
  if (failures++ == 0) first_failure = what;
}

namespace {

long nonzero(std::mt19937& rng, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  for (;;)
    if (long v = d(rng)) return v;
}

Rational small_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  return Rational(num(rng), den(rng));
}

Quaternion random_quaternion(std::mt19937& rng, const QuatAlgebra& h) {
  return Quaternion(h, small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng));
}

Quaternion random_element(std::mt19937& rng, const QuatOrder& o) {
  std::uniform_int_distribution<long> d(-5, 5);
  return o.element({Integer(d(rng)), Integer(d(rng)), Integer(d(rng)), Integer(d(rng))});
}

// trial division, independent of the library's factorization
std::vector<long> primes_of(long n) {
  std::vector<long> out;
  n = std::labs(n);
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

long double ld(const Rational& q) { return q.convert_to<long double>(); }

std::vector<QMLattice> lattices() {
  return {read_lattice_file(fixtures::data_path("af243.json")), read_lattice_file(fixtures::data_path("af1568.json"))};
}

}  // namespace

Sweep nrd_multiplicative(std::uint32_t seed, int n) {
  std::mt19937 rng(seed);
  Sweep s;
  for (int t = 0; t < n; ++t) {
    QuatAlgebra h(nonzero(rng, -20, 20), nonzero(rng, -20, 20));
    Quaternion x = random_quaternion(rng, h), y = random_quaternion(rng, h);
    Quaternion xy = x * y;
    bool pass = xy.nrd() == x.nrd() * y.nrd();
    auto want = oracle::quat_mul(ld(h.a), ld(h.b), {ld(x[0]), ld(x[1]), ld(x[2]), ld(x[3])},
                                 {ld(y[0]), ld(y[1]), ld(y[2]), ld(y[3])});
    for (int k = 0; k < 4; ++k) pass = pass && std::abs(want[k] - ld(xy[k])) < 1e-9L * (1 + std::abs(want[k]));
    s.record(pass, h.str() + ": " + x.str() + " * " + y.str());
  }
  return s;
}

Sweep hilbert_product_formula(std::uint32_t seed, int n) {
  std::mt19937 rng(seed);
  Sweep s;
  for (int t = 0; t < n; ++t) {
    long a = nonzero(rng, -200, 200), b = nonzero(rng, -200, 200);
    auto places = primes_of(2 * a * b);
    int prod = hilbert_symbol(a, b, kInfinity);
    for (long p : places) prod *= hilbert_symbol(a, b, p);
    bool pass = prod == 1;
    // unramified away from 2ab
    for (long p : {101L, 103L, 107L})
      if ((a * b) % p != 0) pass = pass && hilbert_symbol(a, b, p) == 1;
    if (std::labs(a) < 50 && std::labs(b) < 50)
      for (long p : places)
        if (p <= 7) pass = pass && hilbert_symbol(a, b, p) == oracle::hilbert(a, b, p);
    s.record(pass, "(" + std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  return s;
}

Sweep even_ramification(std::uint32_t seed, int n) {
  std::mt19937 rng(seed);
  Sweep s;
  for (int t = 0; t < n; ++t) {
    long a = nonzero(rng, -500, 500), b = nonzero(rng, -500, 500);
    auto r = ramification(QuatAlgebra(a, b));
    s.record((r.finite.size() + (r.infinite ? 1 : 0)) % 2 == 0,
             "(" + std::to_string(a) + ", " + std::to_string(b) + ")");
  }
  return s;
}

Sweep order_discriminant_divisibility(std::uint32_t seed, int n) {
  std::mt19937 rng(seed);
  Sweep s;
  Rational h(1, 2);
  for (int t = 0; t < n; ++t) {
    long a = nonzero(rng, -30, 30), b = nonzero(rng, -30, 30);
    QuatAlgebra alg(a, b);
    std::vector<QuatOrder> orders{QuatOrder(alg, {Quaternion(alg, 1), Quaternion(alg, 0, 1), Quaternion(alg, 0, 0, 1),
                                                  Quaternion(alg, 0, 0, 0, 1)})};
    if (((b % 4) + 4) % 4 == 1)
      orders.emplace_back(alg, std::vector<Quaternion>{Quaternion(alg, 1), Quaternion(alg, 0, 1), Quaternion(alg, h, 0, h),
                                                       Quaternion(alg, 0, h, 0, h)});
    Integer dd = ramification(alg).reduced_discriminant();
    bool pass = true;
    for (const auto& o : orders) {
      Integer disc = order_discriminant(o);
      pass = pass && disc % dd == 0 && (disc == dd) == is_maximal(o);
    }
    pass = pass && order_discriminant(orders[0]) == 4 * std::labs(a * b);
    s.record(pass, alg.str());
  }
  return s;
}

Sweep class_number_oracle(long max_abs_disc) {
  Sweep s;
  for (long d = -3; d >= -max_abs_disc; --d) {
    if (((d % 4) + 4) % 4 > 1) continue;
    long h = class_number(d);
    s.record(h == oracle::class_number(d) && h == class_number_by_reduction(d), "disc " + std::to_string(d));
  }
  return s;
}

Sweep rosati_identities(std::uint32_t seed, int n) {
  std::mt19937 rng(seed);
  Sweep s;
  auto lats = lattices();
  for (int t = 0; t < n; ++t) {
    const auto& lat = lats[t % lats.size()];
    QuatInvolution inv = rosati_involution(lat.action, lat.form);
    Quaternion x = random_element(rng, lat.order), y = random_element(rng, lat.order);
    RatMatrix m = lat.action.action(x), nn = lat.action.action(y);
    bool pass = rosati(rosati(m, lat.form), lat.form) == m &&
                rosati(m * nn, lat.form) == rosati(nn, lat.form) * rosati(m, lat.form) &&
                lat.action.action(inv.apply(x)) == rosati(m, lat.form) && inv.apply(inv.apply(x)) == x &&
                inv.apply(x * y) == inv.apply(y) * inv.apply(x);
    if (!x.is_zero()) pass = pass && (x * inv.apply(x)).trd() > 0;
    s.record(pass, lat.label + ": " + x.str() + ", " + y.str());
  }
  return s;
}

Sweep absolute_invariants_gl2(std::uint32_t seed, int n) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> c(-4, 4), m(-3, 3);
  Sweep s;
  while (s.instances < n) {
    std::vector<QuadElem> co;
    for (int i = 0; i < 7; ++i) co.emplace_back(c(rng), c(rng), -3);
    if (co[6].is_zero() || co[0].is_zero()) continue;
    PolyQF f(co);
    if (!is_squarefree(f)) continue;
    long a = m(rng), b = m(rng), cc = m(rng), d = m(rng);
    if (a * d - b * cc == 0) continue;
    auto q = [](long v) { return QuadElem(v, -3); };
    PolyQF g = transform_sextic(f, q(a), q(b), q(cc), q(d)) * QuadElem(Rational(c(rng) | 1), 1, -3);
    auto fi = absolute_invariants(igusa_clebsch(f));
    auto gi = absolute_invariants(igusa_clebsch(g));
    s.record(fi == gi, to_string(f) + " under (" + std::to_string(a) + "," + std::to_string(b) + "," +
                           std::to_string(cc) + "," + std::to_string(d) + ")");
  }
  return s;
}

Sweep det_is_norm_squared(std::uint32_t seed, int n) {
  std::mt19937 rng(seed);
  Sweep s;
  auto lats = lattices();
  for (int t = 0; t < n; ++t) {
    const auto& lat = lats[t % lats.size()];
    Quaternion x = random_element(rng, lat.order);
    RatMatrix mx = lat.action.action(x);
    s.record(determinant(mx) == x.nrd() * x.nrd() && is_integral(mx), lat.label + ": " + x.str());
  }
  return s;
}

Sweep quadratic_field_axioms(std::uint32_t seed, int n) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, 4);
  const long deltas[] = {-1, -3, -7, 2, 5};
  ReconstructConfig cfg;
  Sweep s;
  for (int t = 0; t < n; ++t) {
    long dl = deltas[pick(rng)];
    auto r = [&] { return QuadElem(small_rational(rng), small_rational(rng), dl); };
    QuadElem x = r(), y = r(), z = r();
    bool pass = (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z && (x * y).conj() == x.conj() * y.conj() &&
                (x + y).conj() == x.conj() + y.conj();
    if (!x.is_zero()) pass = pass && x * x.inverse() == QuadElem(1, dl);
    if (dl < 0) {
      auto back = recognize_qf_element(x.embed(60), dl, cfg.max_denominator, cfg.tolerance());
      pass = pass && back && *back == x;
    }
    s.record(pass, x.str() + ", " + y.str() + ", " + z.str());
  }
  return s;
}

Sweep frobenius_normal_form(std::uint32_t seed, int n) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> d(-6, 6);
  Sweep s;
  while (s.instances < n) {
    RatMatrix e(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        e(i, j) = d(rng);
        e(j, i) = -e(i, j);
      }
    Rational pf = pfaffian(e);
    if (pf == 0) continue;
    auto ff = frobenius_type(e);
    bool pass = is_unimodular(ff.change) &&
                ff.change.transpose() * e * ff.change == standard_alternating(ff.type.d1, ff.type.d2) &&
                ff.type.d2 % ff.type.d1 == 0 && Rational(ff.type.d1 * ff.type.d2) == abs(pf);
    s.record(pass, to_string(e));
  }
  return s;
}

}  // namespace props
