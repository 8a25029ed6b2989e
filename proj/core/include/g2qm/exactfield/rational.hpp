#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace g2qm {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// Accepts "p", "-p/q" and plain decimals such as "0.25".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

inline Integer num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer den(const Rational& q) { return boost::multiprecision::denominator(q); }
inline bool is_integer(const Rational& q) { return den(q) == 1; }

Integer floor_div(const Integer& a, const Integer& b);
Integer mod_floor(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Rational pow(const Rational& q, int e);

// Square-free part with sign, e.g. -12 -> -3, 18 -> 2.
Integer squarefree_part(const Integer& n);
bool is_squarefree(const Integer& n);

}  // namespace g2qm
