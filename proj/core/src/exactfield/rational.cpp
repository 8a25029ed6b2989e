#include "g2qm/exactfield/rational.hpp"

#include <stdexcept>
#include <string>

namespace g2qm {

namespace {

Integer parse_integer(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("malformed integer: " + std::string(s));
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("malformed integer: " + std::string(s));
  // strip leading zeros: the gmp string constructor reads "025" as octal
  std::size_t first = i;
  while (first + 1 < s.size() && s[first] == '0') ++first;
  std::string body(s.substr(first));
  return Integer(s[0] == '-' ? "-" + body : body);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Integer p = parse_integer(trim(s.substr(0, slash)));
    Integer q = parse_integer(trim(s.substr(slash + 1)));
    if (q == 0) throw std::invalid_argument("zero denominator in " + std::string(s));
    return Rational(p, q);
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
    if (digits.empty() || digits == "-" || digits == "+")
      throw std::invalid_argument("malformed decimal: " + std::string(s));
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(s.size() - dot - 1));
    return Rational(parse_integer(digits), scale);
  }
  return Rational(parse_integer(s));
}

std::string to_string(const Rational& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw std::domain_error("floor_div by zero");
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Integer mod_floor(const Integer& a, const Integer& b) { return a - b * floor_div(a, b); }

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

Rational pow(const Rational& q, int e) {
  if (e < 0) {
    if (q == 0) throw std::domain_error("negative power of zero");
    return pow(Rational(1) / q, -e);
  }
  Rational r = 1, base = q;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Integer squarefree_part(const Integer& n) {
  if (n == 0) throw std::domain_error("squarefree part of zero");
  Integer m = boost::multiprecision::abs(n);
  Integer out = 1;
  for (Integer p = 2; p * p <= m; ++p) {
    int e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  out *= m;
  return n < 0 ? Integer(-out) : out;
}

bool is_squarefree(const Integer& n) { return n != 0 && squarefree_part(n) == n; }

}  // namespace g2qm
