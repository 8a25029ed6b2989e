#include "g2qm/quatalg/classnumber.hpp"

#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

#include "g2qm/quatalg/hilbert.hpp"

namespace g2qm {

namespace {

void check_disc(long disc) {
  long r = ((disc % 4) + 4) % 4;
  if (disc >= 0 || (r != 0 && r != 1))
    throw std::invalid_argument("discriminant must be negative and 0 or 1 mod 4 (got " +
                                std::to_string(disc) + ")");
}

bool primitive(long a, long b, long c) { return std::gcd(std::gcd(a, std::abs(b)), c) == 1; }

}  // namespace

std::vector<BQForm> reduced_forms(long disc) {
  check_disc(disc);
  std::vector<BQForm> out;
  for (long a = 1; 3 * a * a <= -disc; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      if (((b - disc) % 2) != 0) continue;
      long num4 = b * b - disc;
      if (num4 % (4 * a)) continue;
      long c = num4 / (4 * a);
      if (c < a) continue;
      if (c == a && b < 0) continue;
      if (!primitive(a, b, c)) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

long class_number(long disc) { return static_cast<long>(reduced_forms(disc).size()); }

BQForm reduce_form(BQForm f) {
  const long d = f.discriminant();
  if (d >= 0 || f.a <= 0) throw std::invalid_argument("reduce_form expects a positive definite form");
  for (;;) {
    // bring b into (-a, a]
    long k = static_cast<long>(std::floor(static_cast<double>(f.a - f.b) / (2.0 * f.a)));
    f.b += 2 * f.a * k;
    f.c = (f.b * f.b - d) / (4 * f.a);
    if (f.c < f.a) {
      f = {f.c, -f.b, f.a};
      continue;
    }
    if (f.c == f.a && f.b < 0) f.b = -f.b;
    return f;
  }
}

long class_number_by_reduction(long disc) {
  check_disc(disc);
  std::set<BQForm> seen;
  const long box = 2 * static_cast<long>(std::sqrt(static_cast<double>(-disc))) + 5;
  for (long a = 1; a <= box; ++a)
    for (long b = -box; b <= box; ++b) {
      long num4 = b * b - disc;
      if (num4 % (4 * a)) continue;
      long c = num4 / (4 * a);
      if (!primitive(a, b, c)) continue;
      seen.insert(reduce_form({a, b, c}));
    }
  return static_cast<long>(seen.size());
}

Integer pi_principal_count(long D) {
  if (D < 2) throw std::invalid_argument("pi(D) needs a reduced discriminant D > 1");
  auto primes = prime_factors(Integer(D));
  if (!is_squarefree(Integer(D)) || primes.size() % 2)
    throw std::invalid_argument("D = " + std::to_string(D) +
                                " is not a product of an even number of distinct primes");
  long h4 = class_number(-4 * D);
  long total = (D % 4 == 3) ? h4 + class_number(-D) : h4;
  if (total % 2) throw std::logic_error("non-integral principal polarization count for D = " + std::to_string(D));
  return total / 2;
}

}  // namespace g2qm
