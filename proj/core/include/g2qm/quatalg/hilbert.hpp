#pragma once

#include <vector>

#include "g2qm/quatalg/quaternion.hpp"

namespace g2qm {

// Place: a prime p, or 0 for the infinite place.
inline constexpr long kInfinity = 0;

int hilbert_symbol(const Rational& a, const Rational& b, long p);
// Oracle: looks for a primitive solution of a x^2 + b y^2 = z^2 modulo p^k.
int hilbert_symbol_bruteforce(long a, long b, long p);

std::vector<long> prime_factors(const Integer& n);
bool is_prime(long n);

struct Ramification {
  std::vector<long> finite;  // sorted
  bool infinite{false};
  Integer reduced_discriminant() const;  // product of the finite ramified primes
  bool definite() const { return infinite; }
};

Ramification ramification(const QuatAlgebra& alg);
std::vector<long> ramified_primes(const QuatAlgebra& alg);
// Throws for definite algebras; the discriminant convention here is for indefinite ones.
Integer reduced_discriminant(const QuatAlgebra& alg);
bool algebras_isomorphic(const QuatAlgebra& x, const QuatAlgebra& y);

}  // namespace g2qm
