#include "g2qm/quatalg/hilbert.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace g2qm {

namespace {

// a = p^v * u with p not dividing u
int split_valuation(Integer& a, long p) {
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

int legendre(const Integer& u, long p) {
  Integer r = mod_floor(u, p);
  if (r == 0) return 0;
  Integer e = boost::multiprecision::powm(r, Integer((p - 1) / 2), Integer(p));
  return e == 1 ? 1 : -1;
}

int eps2(const Integer& u) {  // (u - 1)/2 mod 2, u odd
  return static_cast<int>(mod_floor(u, 4) == 3);
}

int omega2(const Integer& u) {  // (u^2 - 1)/8 mod 2, u odd
  Integer r = mod_floor(u, 8);
  return static_cast<int>(r == 3 || r == 5);
}

// Integer representative of the square class of q.
Integer square_class_integer(const Rational& q) { return num(q) * den(q); }

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> prime_factors(const Integer& n) {
  std::vector<long> out;
  Integer m = boost::multiprecision::abs(n);
  for (long p = 2; Integer(p) * p <= m; ++p) {
    if (m % p != 0) continue;
    out.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) {
    if (m > Integer(std::numeric_limits<long>::max()))
      throw std::overflow_error("prime factor too large");
    out.push_back(m.convert_to<long>());
  }
  return out;
}

int hilbert_symbol(const Rational& a, const Rational& b, long p) {
  if (a == 0 || b == 0) throw std::invalid_argument("Hilbert symbol of zero");
  if (p == kInfinity) return (a < 0 && b < 0) ? -1 : 1;
  if (!is_prime(p)) throw std::invalid_argument("Hilbert symbol needs a prime or infinity");
  Integer u = square_class_integer(a), v = square_class_integer(b);
  int alpha = split_valuation(u, p);
  int beta = split_valuation(v, p);
  if (p != 2) {
    int sign = ((alpha * beta) % 2 == 1 && ((p - 1) / 2) % 2 == 1) ? -1 : 1;
    if (beta % 2) sign *= legendre(u, p);
    if (alpha % 2) sign *= legendre(v, p);
    return sign;
  }
  int e = eps2(u) * eps2(v) + alpha * omega2(v) + beta * omega2(u);
  return e % 2 ? -1 : 1;
}

int hilbert_symbol_bruteforce(long a, long b, long p) {
  if (a == 0 || b == 0) throw std::invalid_argument("Hilbert symbol of zero");
  if (p == kInfinity) return (a < 0 && b < 0) ? -1 : 1;
  // Squarefree parts keep valuations in {0, 1}, so a low modulus decides.
  long sa = squarefree_part(Integer(a)).convert_to<long>();
  long sb = squarefree_part(Integer(b)).convert_to<long>();
  long mod = 1;
  for (int i = 0; i < (p == 2 ? 5 : 3); ++i) mod *= p;
  std::vector<char> any_root(mod, 0), unit_root(mod, 0);
  for (long z = 0; z < mod; ++z) {
    long r = (z * z) % mod;
    any_root[r] = 1;
    if (z % p) unit_root[r] = 1;
  }
  auto red = [mod](long v) { return ((v % mod) + mod) % mod; };
  long am = red(sa), bm = red(sb);
  for (long x = 0; x < mod; ++x) {
    long ax = (am * ((x * x) % mod)) % mod;
    for (long y = 0; y < mod; ++y) {
      long r = (ax + bm * ((y * y) % mod)) % mod;
      bool xy_unit = (x % p) || (y % p);
      if (xy_unit ? any_root[r] : unit_root[r]) return 1;
    }
  }
  return -1;
}

Integer Ramification::reduced_discriminant() const {
  Integer d = 1;
  for (long p : finite) d *= p;
  return d;
}

Ramification ramification(const QuatAlgebra& alg) {
  std::set<long> candidates{2};
  for (const Integer& z : {num(alg.a), den(alg.a), num(alg.b), den(alg.b)})
    for (long p : prime_factors(z)) candidates.insert(p);
  Ramification r;
  for (long p : candidates)
    if (hilbert_symbol(alg.a, alg.b, p) == -1) r.finite.push_back(p);
  r.infinite = hilbert_symbol(alg.a, alg.b, kInfinity) == -1;
  return r;
}

std::vector<long> ramified_primes(const QuatAlgebra& alg) { return ramification(alg).finite; }

Integer reduced_discriminant(const QuatAlgebra& alg) {
  Ramification r = ramification(alg);
  if (r.definite())
    throw std::domain_error("algebra " + alg.str() + " is definite; reduced discriminant convention applies to indefinite algebras");
  return r.reduced_discriminant();
}

bool algebras_isomorphic(const QuatAlgebra& x, const QuatAlgebra& y) {
  Ramification rx = ramification(x), ry = ramification(y);
  return rx.finite == ry.finite && rx.infinite == ry.infinite;
}

}  // namespace g2qm
