#include "g2qm/quatalg/order.hpp"

#include <stdexcept>

#include "g2qm/quatalg/hilbert.hpp"

namespace g2qm {

QuatOrder::QuatOrder(const QuatAlgebra& alg, std::vector<Quaternion> basis)
    : alg_(alg), basis_(std::move(basis)) {
  if (basis_.size() != 4) throw std::invalid_argument("an order needs exactly 4 basis elements");
  bmat_ = RatMatrix(4, 4, Rational(0));
  for (int c = 0; c < 4; ++c) {
    if (!(basis_[c].algebra() == alg_)) throw std::invalid_argument("order basis outside algebra");
    for (int r = 0; r < 4; ++r) bmat_(r, c) = basis_[c][r];
  }
  auto inv = inverse(bmat_);
  if (!inv) throw std::invalid_argument("order basis does not have rank 4");
  binv_ = *inv;
  if (!contains(Quaternion(alg_, 1))) throw std::invalid_argument("1 is not in the order");
  for (const auto& x : basis_)
    for (const auto& y : basis_)
      if (!contains(x * y))
        throw std::invalid_argument("basis not closed under multiplication: (" + x.str() + ")*(" +
                                    y.str() + ") = " + (x * y).str());
}

std::optional<std::array<Integer, 4>> QuatOrder::coordinates(const Quaternion& x) const {
  std::array<Integer, 4> out;
  for (int r = 0; r < 4; ++r) {
    Rational s = 0;
    for (int c = 0; c < 4; ++c) s += binv_(r, c) * x[c];
    if (!is_integer(s)) return std::nullopt;
    out[r] = num(s);
  }
  return out;
}

Quaternion QuatOrder::element(const std::array<Integer, 4>& c) const {
  Quaternion x(alg_);
  for (int i = 0; i < 4; ++i) x += basis_[i] * Rational(c[i]);
  return x;
}

Integer QuatOrder::max_denominator() const {
  Integer m = 1;
  for (const auto& v : bmat_.data()) m = std::max(m, den(v));
  return m;
}

bool QuatOrder::same_lattice(const QuatOrder& other) const {
  if (!(alg_ == other.alg_)) return false;
  RatMatrix t = binv_ * other.bmat_;
  if (!is_integral(t)) return false;
  Rational d = determinant(t);
  return d == 1 || d == -1;
}

Integer order_discriminant(const QuatOrder& o) {
  RatMatrix g(4, 4, Rational(0));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = (o.basis()[i] * o.basis()[j].conj()).trd();
  Rational d = boost::multiprecision::abs(determinant(g));
  if (!is_integer(d)) throw std::logic_error("order Gram determinant is not integral");
  Integer root = boost::multiprecision::sqrt(num(d));
  if (root * root != num(d)) throw std::logic_error("order Gram determinant is not a square");
  return root;
}

bool is_maximal(const QuatOrder& o) {
  return order_discriminant(o) == ramification(o.algebra()).reduced_discriminant();
}

}  // namespace g2qm
