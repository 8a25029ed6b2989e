#include "g2qm/exactfield/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace g2qm {

RatMatrix rat_identity(std::size_t n) {
  RatMatrix m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix rat_from_ints(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows[0].size(), Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged integer matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool is_integral(const RatMatrix& m) {
  for (const auto& x : m.data())
    if (!is_integer(x)) return false;
  return true;
}

bool is_alternating(const RatMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (m(i, j) != -m(j, i)) return false;
  }
  return true;
}

namespace {

// Gauss-Jordan on [m | b]; returns false when m is singular.
bool gauss_jordan(RatMatrix& m, RatMatrix& b, Rational* det) {
  const std::size_t n = m.rows();
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) {
      if (det) *det = 0;
      return false;
    }
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(col, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(piv, j), b(col, j));
      d = -d;
    }
    Rational p = m(col, col);
    d *= p;
    for (std::size_t j = 0; j < n; ++j) m(col, j) /= p;
    for (std::size_t j = 0; j < b.cols(); ++j) b(col, j) /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(col, j);
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(col, j);
    }
  }
  if (det) *det = d;
  return true;
}

}  // namespace

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix a = m, b(m.rows(), 0, Rational(0));
  Rational d;
  gauss_jordan(a, b, &d);
  return d;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  RatMatrix a = m, b = rat_identity(m.rows());
  if (!gauss_jordan(a, b, nullptr)) return std::nullopt;
  return b;
}

std::optional<RatMatrix> solve(const RatMatrix& m, const RatMatrix& rhs) {
  if (m.rows() != m.cols() || rhs.rows() != m.rows())
    throw std::invalid_argument("solve: shape mismatch");
  RatMatrix a = m, b = rhs;
  if (!gauss_jordan(a, b, nullptr)) return std::nullopt;
  return b;
}

std::string to_string(const RatMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

CMatrix cidentity(std::size_t n, int digits) {
  CMatrix m(n, n, BigComplex(digits));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = BigComplex(1, 0, digits);
  return m;
}

CMatrix to_complex(const RatMatrix& m, int digits) {
  CMatrix c(m.rows(), m.cols(), BigComplex(digits));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = BigComplex(to_real(m(i, j)), 0, digits);
  return c;
}

CMatrix embed(const QFMatrix& m, int digits) {
  CMatrix c(m.rows(), m.cols(), BigComplex(digits));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j).embed(digits);
  return c;
}

CMatrix conj_transpose(const CMatrix& m) {
  CMatrix t = m.transpose();
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) t(i, j) = t(i, j).conj();
  return t;
}

std::optional<CMatrix> inverse(const CMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  int digits = n ? m(0, 0).digits() : kDefaultDigits;
  CMatrix a = m, b = cidentity(n, digits);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    Real best = -1;
    for (std::size_t i = col; i < n; ++i) {
      Real v = a(i, col).norm();
      if (v > best) best = v, piv = i;
    }
    if (best == 0) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(piv, j), a(col, j));
      std::swap(b(piv, j), b(col, j));
    }
    BigComplex inv = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= inv;
      b(col, j) *= inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      BigComplex f = a(i, col);
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        b(i, j) -= f * b(col, j);
      }
    }
  }
  return b;
}

Real max_abs(const CMatrix& m) {
  Real best = 0;
  for (const auto& z : m.data()) best = std::max(best, z.abs());
  return best;
}

Real min_eigen_hermitian2(const CMatrix& h) {
  if (h.rows() != 2 || h.cols() != 2) throw std::invalid_argument("expected a 2x2 matrix");
  Real a = h(0, 0).re(), d = h(1, 1).re();
  BigComplex b = (h(0, 1) + h(1, 0).conj()) * Real(0.5);
  Real disc = boost::multiprecision::sqrt((a - d) * (a - d) + 4 * b.norm());
  return (a + d - disc) / 2;
}

std::optional<RealSolve> solve(const RealMatrix& m, const RealMatrix& rhs) {
  const std::size_t n = m.rows();
  if (n != m.cols() || rhs.rows() != n) throw std::invalid_argument("solve: shape mismatch");
  auto inf_norm = [n](const RealMatrix& x) {
    Real best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Real s = 0;
      for (std::size_t j = 0; j < x.cols(); ++j) s += boost::multiprecision::abs(x(i, j));
      best = std::max(best, s);
    }
    return best;
  };
  RealMatrix a = m, inv(n, n, Real(0));
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (boost::multiprecision::abs(a(i, col)) > boost::multiprecision::abs(a(piv, col))) piv = i;
    if (a(piv, col) == 0) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(piv, j), a(col, j));
      std::swap(inv(piv, j), inv(col, j));
    }
    Real p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Real f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return RealSolve{inv * rhs, inf_norm(m) * inf_norm(inv)};
}

}  // namespace g2qm
