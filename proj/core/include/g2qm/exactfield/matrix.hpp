#pragma once

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "g2qm/exactfield/bigcomplex.hpp"
#include "g2qm/exactfield/quadfield.hpp"
#include "g2qm/exactfield/rational.hpp"

namespace g2qm {

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Real zero_like(const Real&) { return Real(0); }
inline BigComplex zero_like(const BigComplex& z) { return BigComplex(z.digits()); }
inline QuadElem zero_like(const QuadElem& x) { return QuadElem(x.delta()); }

// Row-major dense matrix.  Used with Rational, Real and BigComplex entries.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : r_(rows), c_(cols), a_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
      if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Matrix transpose() const {
    Matrix t(c_, r_, a_.empty() ? T() : a_[0]);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.c_ != y.r_) throw std::invalid_argument("matrix shape mismatch");
    Matrix z(x.r_, y.c_, x.zero_like());
    for (std::size_t i = 0; i < x.r_; ++i)
      for (std::size_t k = 0; k < x.c_; ++k) {
        const T& xik = x(i, k);
        for (std::size_t j = 0; j < y.c_; ++j) z(i, j) += xik * y(k, j);
      }
    return z;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) {
    check_same(x, y);
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    check_same(x, y);
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }
  friend Matrix operator*(Matrix x, const T& s) {
    for (auto& v : x.a_) v = v * s;
    return x;
  }
  friend Matrix operator*(const T& s, Matrix x) { return std::move(x) * s; }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& v : m.a_) v = -v;
    return m;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }

  const std::vector<T>& data() const { return a_; }

 private:
  T zero_like() const { return a_.empty() ? T() : g2qm::zero_like(a_[0]); }
  static void check_same(const Matrix& x, const Matrix& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) throw std::invalid_argument("matrix shape mismatch");
  }
  std::size_t r_{0}, c_{0};
  std::vector<T> a_;
};

using RatMatrix = Matrix<Rational>;
using RealMatrix = Matrix<Real>;
using CMatrix = Matrix<BigComplex>;
using QFMatrix = Matrix<QuadElem>;

RatMatrix rat_identity(std::size_t n);
RatMatrix rat_from_ints(const std::vector<std::vector<long>>& rows);
bool is_integral(const RatMatrix& m);
bool is_alternating(const RatMatrix& m);
Rational determinant(const RatMatrix& m);
std::optional<RatMatrix> inverse(const RatMatrix& m);
// Solves m x = b exactly; nullopt when m is singular.
std::optional<RatMatrix> solve(const RatMatrix& m, const RatMatrix& b);
std::string to_string(const RatMatrix& m);

CMatrix cidentity(std::size_t n, int digits);
CMatrix to_complex(const RatMatrix& m, int digits);
CMatrix embed(const QFMatrix& m, int digits);
CMatrix conj_transpose(const CMatrix& m);
std::optional<CMatrix> inverse(const CMatrix& m);
Real max_abs(const CMatrix& m);
// Smallest eigenvalue of a 2x2 Hermitian matrix (imaginary noise on the diagonal is ignored).
Real min_eigen_hermitian2(const CMatrix& h);

struct RealSolve {
  RealMatrix x;
  Real condition;  // infinity-norm condition estimate
};
std::optional<RealSolve> solve(const RealMatrix& m, const RealMatrix& b);

}  // namespace g2qm
