#include "g2qm/quatalg/lattice.hpp"

#include <stdexcept>

namespace g2qm {

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  Integer r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = floor_div(r0, r1);
    Integer r2 = r0 - q * r1, s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1, r1 = r2, s0 = s1, s1 = s2, t0 = t1, t1 = t2;
  }
  if (r0 < 0) r0 = -r0, s0 = -s0, t0 = -t0;
  return {r0, s0, t0};
}

std::vector<RatVec> lattice_basis(const std::vector<RatVec>& generators) {
  if (generators.empty()) return {};
  const std::size_t n = generators[0].size();
  Integer scale = 1;
  for (const auto& g : generators) {
    if (g.size() != n) throw std::invalid_argument("lattice generators of mixed dimension");
    for (const auto& x : g) scale = lcm(scale, den(x));
  }
  std::vector<IntVec> rows;
  for (const auto& g : generators) {
    IntVec r(n);
    for (std::size_t j = 0; j < n; ++j) r[j] = num(g[j] * scale);
    rows.push_back(std::move(r));
  }
  std::size_t piv = 0;
  for (std::size_t col = 0; col < n && piv < rows.size(); ++col) {
    for (std::size_t r = piv + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      ExtGcd e = ext_gcd(rows[piv][col], rows[r][col]);
      Integer u = rows[piv][col] / e.g, v = rows[r][col] / e.g;
      for (std::size_t j = 0; j < n; ++j) {
        Integer x = rows[piv][j], y = rows[r][j];
        rows[piv][j] = e.s * x + e.t * y;
        rows[r][j] = -v * x + u * y;
      }
    }
    if (rows[piv][col] == 0) continue;
    if (rows[piv][col] < 0)
      for (auto& x : rows[piv]) x = -x;
    for (std::size_t r = 0; r < piv; ++r) {
      Integer q = floor_div(rows[r][col], rows[piv][col]);
      for (std::size_t j = 0; j < n; ++j) rows[r][j] -= q * rows[piv][j];
    }
    ++piv;
  }
  std::vector<RatVec> out;
  for (std::size_t r = 0; r < piv; ++r) {
    RatVec v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = Rational(rows[r][j], scale);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<IntVec> integer_kernel(const RatMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<IntVec> mat(m, IntVec(n));
  for (std::size_t i = 0; i < m; ++i) {
    Integer scale = 1;
    for (std::size_t j = 0; j < n; ++j) scale = lcm(scale, den(a(i, j)));
    for (std::size_t j = 0; j < n; ++j) mat[i][j] = num(a(i, j) * scale);
  }
  std::vector<IntVec> u(n, IntVec(n, 0));  // u[row][col], columns are basis vectors
  for (std::size_t j = 0; j < n; ++j) u[j][j] = 1;
  auto col_op = [&](std::size_t c1, std::size_t c2, const Integer& s, const Integer& t,
                    const Integer& p, const Integer& q) {
    // (c1, c2) <- (s c1 + t c2, p c1 + q c2)
    for (auto& row : mat) {
      Integer x = row[c1], y = row[c2];
      row[c1] = s * x + t * y;
      row[c2] = p * x + q * y;
    }
    for (auto& row : u) {
      Integer x = row[c1], y = row[c2];
      row[c1] = s * x + t * y;
      row[c2] = p * x + q * y;
    }
  };
  std::size_t piv = 0;
  for (std::size_t i = 0; i < m && piv < n; ++i) {
    for (std::size_t j = piv + 1; j < n; ++j) {
      if (mat[i][j] == 0) continue;
      ExtGcd e = ext_gcd(mat[i][piv], mat[i][j]);
      Integer x = mat[i][piv] / e.g, y = mat[i][j] / e.g;
      col_op(piv, j, e.s, e.t, -y, x);
    }
    if (mat[i][piv] != 0) ++piv;
  }
  std::vector<IntVec> out;
  for (std::size_t c = piv; c < n; ++c) {
    IntVec v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = u[r][c];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace g2qm
