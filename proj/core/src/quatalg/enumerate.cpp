#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "g2qm/quatalg/lattice.hpp"
#include "g2qm/quatalg/symmetric.hpp"

namespace g2qm {

namespace {

using i128 = __int128;
using Vec4 = std::array<long, 4>;

long to_long(const Integer& z) {
  if (z > Integer(std::numeric_limits<long>::max() / 4) || z < Integer(std::numeric_limits<long>::min() / 4))
    throw std::overflow_error("coefficient too large for the integer enumeration kernel");
  return z.convert_to<long>();
}

long to_long(i128 z) {
  if (z > std::numeric_limits<long>::max() / 4 || z < std::numeric_limits<long>::min() / 4)
    throw std::overflow_error("intermediate too large for the integer enumeration kernel");
  return static_cast<long>(z);
}

// Integer model of the algebra: elements are stored multiplied by a common scale L.
struct ScaledAlgebra {
  long a, b, scale;

  i128 norm(const Vec4& v) const {
    i128 x0 = v[0], x1 = v[1], x2 = v[2], x3 = v[3];
    return x0 * x0 - i128(a) * x1 * x1 - i128(b) * x2 * x2 + i128(a) * b * x3 * x3;
  }
  i128 inner(const Vec4& v, const Vec4& w) const {  // polar form of norm
    return i128(v[0]) * w[0] - i128(a) * v[1] * w[1] - i128(b) * v[2] * w[2] +
           i128(a) * b * v[3] * w[3];
  }
  // (L x)(L y) / L
  std::optional<Vec4> mul(const Vec4& p, const Vec4& q) const {
    i128 r[4] = {
        i128(p[0]) * q[0] + i128(a) * p[1] * q[1] + i128(b) * p[2] * q[2] - i128(a) * b * p[3] * q[3],
        i128(p[0]) * q[1] + i128(p[1]) * q[0] - i128(b) * p[2] * q[3] + i128(b) * p[3] * q[2],
        i128(p[0]) * q[2] + i128(p[2]) * q[0] + i128(a) * p[1] * q[3] - i128(a) * p[3] * q[1],
        i128(p[0]) * q[3] + i128(p[3]) * q[0] + i128(p[1]) * q[2] - i128(p[2]) * q[1]};
    Vec4 out;
    for (int i = 0; i < 4; ++i) {
      if (r[i] % scale) return std::nullopt;
      out[i] = to_long(r[i] / scale);
    }
    return out;
  }
};

long integral_param(const Rational& q, const char* name) {
  if (!is_integer(q))
    throw std::invalid_argument(std::string("enumeration needs an integral algebra parameter ") + name);
  return to_long(num(q));
}

Vec4 scaled(const Quaternion& x, long scale) {
  Vec4 v;
  for (int i = 0; i < 4; ++i) {
    Rational s = x[i] * scale;
    if (!is_integer(s)) throw std::logic_error("scale does not clear denominators");
    v[i] = to_long(num(s));
  }
  return v;
}

Quaternion unscaled(const QuatAlgebra& alg, const Vec4& v, long scale) {
  return {alg, Rational(v[0], scale), Rational(v[1], scale), Rational(v[2], scale),
          Rational(v[3], scale)};
}

long common_scale(const std::vector<Quaternion>& xs) {
  Integer l = 1;
  for (const auto& x : xs)
    for (int i = 0; i < 4; ++i) l = lcm(l, den(x[i]));
  return to_long(l);
}

bool isqrt_exact(i128 n, i128& root) {
  if (n < 0) return false;
  long double approx = std::sqrt(static_cast<long double>(n));
  i128 r = static_cast<i128>(approx);
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  root = r;
  return r * r == n;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) {
    x = find(x), y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

Rational height(const Quaternion& x) {
  Rational h = 0;
  for (int i = 0; i < 4; ++i) h += boost::multiprecision::abs(x[i]);
  return h;
}

bool height_less(const Quaternion& x, const Quaternion& y) {
  Rational hx = height(x), hy = height(y);
  if (hx != hy) return hx < hy;
  // prefer positive coordinates, then lexicographic
  for (int i = 0; i < 4; ++i)
    if (x[i] != y[i]) return x[i] > y[i];
  return false;
}

}  // namespace

QuatInvolution::QuatInvolution(RatMatrix s) : s_(std::move(s)) {
  if (s_.rows() != 4 || s_.cols() != 4) throw std::invalid_argument("involution needs a 4x4 matrix");
}

QuatInvolution QuatInvolution::from_j_sign(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("j sign must be +1 or -1");
  RatMatrix s = rat_identity(4);
  s(2, 2) = sign;
  s(3, 3) = -sign;
  return QuatInvolution(s);
}

Quaternion QuatInvolution::apply(const Quaternion& x) const {
  std::array<Rational, 4> y;
  for (int r = 0; r < 4; ++r) {
    y[r] = 0;
    for (int c = 0; c < 4; ++c) y[r] += s_(r, c) * x[c];
  }
  return {x.algebra(), y};
}

int QuatInvolution::j_sign() const {
  for (int sign : {1, -1})
    if (s_ == from_j_sign(sign).s_) return sign;
  return 0;
}

std::vector<Quaternion> symmetric_sublattice(const QuatOrder& o, const QuatInvolution& inv) {
  RatMatrix a = (inv.matrix() - rat_identity(4)) * o.basis_matrix();
  std::vector<RatVec> gens;
  for (const auto& c : integer_kernel(a)) {
    Quaternion x = o.element({c[0], c[1], c[2], c[3]});
    gens.push_back({x[0], x[1], x[2], x[3]});
  }
  std::vector<Quaternion> out;
  for (const auto& v : lattice_basis(gens)) out.emplace_back(o.algebra(), v[0], v[1], v[2], v[3]);
  return out;
}

std::vector<Quaternion> symmetric_sublattice(const QuatOrder& o, int j_sign) {
  return symmetric_sublattice(o, QuatInvolution::from_j_sign(j_sign));
}

bool is_totally_positive_symmetric(const Quaternion& x) { return x.trd() > 0 && x.nrd() > 0; }

std::vector<Quaternion> bounded_units(const QuatOrder& o, long h) {
  const QuatAlgebra& alg = o.algebra();
  const long scale = common_scale(o.basis());
  ScaledAlgebra sa{integral_param(alg.a, "a"), integral_param(alg.b, "b"), scale};
  std::array<Vec4, 4> w;
  for (int i = 0; i < 4; ++i) w[i] = scaled(o.basis()[i], scale);
  const i128 target = i128(scale) * scale;
  const i128 qa = sa.norm(w[3]);
  std::vector<Quaternion> out;
  for (long c0 = -h; c0 <= h; ++c0)
    for (long c1 = -h; c1 <= h; ++c1)
      for (long c2 = -h; c2 <= h; ++c2) {
        Vec4 u0;
        for (int k = 0; k < 4; ++k) u0[k] = c0 * w[0][k] + c1 * w[1][k] + c2 * w[2][k];
        i128 qb = 2 * sa.inner(u0, w[3]);
        i128 qc = sa.norm(u0);
        for (i128 rhs : {target, -target}) {
          std::vector<i128> roots;
          if (qa == 0) {
            if (qb != 0 && (rhs - qc) % qb == 0) roots.push_back((rhs - qc) / qb);
          } else {
            i128 disc = qb * qb - 4 * qa * (qc - rhs), s;
            if (!isqrt_exact(disc, s)) continue;
            for (i128 num4 : {-qb + s, -qb - s})
              if (num4 % (2 * qa) == 0) roots.push_back(num4 / (2 * qa));
            if (s == 0 && roots.size() == 2) roots.pop_back();
          }
          for (i128 c3 : roots) {
            if (c3 < -h || c3 > h) continue;
            out.push_back(o.element({c0, c1, c2, Integer(static_cast<long>(c3))}));
          }
        }
      }
  return out;
}

PositiveNormClasses enumerate_positive_norm_d(const QuatOrder& o, const QuatInvolution& inv,
                                              long d, const EnumerateOptions& opts) {
  if (d <= 0) throw std::invalid_argument("reduced norm target must be positive");
  const QuatAlgebra& alg = o.algebra();
  auto sym = symmetric_sublattice(o, inv);
  if (sym.size() != 3) throw std::logic_error("symmetric sublattice does not have rank 3");

  PositiveNormClasses res;
  res.coeff_bound = opts.coeff_bound > 0 ? opts.coeff_bound : 4 * d * to_long(o.max_denominator());
  const long bound = res.coeff_bound;
  // units live in O, whose denominators may exceed those of the symmetric part
  const long scale = std::lcm(common_scale(sym), common_scale(o.basis()));
  ScaledAlgebra sa{integral_param(alg.a, "a"), integral_param(alg.b, "b"), scale};
  std::array<Vec4, 3> v;
  for (int i = 0; i < 3; ++i) v[i] = scaled(sym[i], scale);
  const i128 target = i128(d) * scale * scale;

  std::vector<Vec4> found;
  for (long c0 = -bound; c0 <= bound; ++c0)
    for (long c1 = -bound; c1 <= bound; ++c1)
      for (long c2 = -bound; c2 <= bound; ++c2) {
        Vec4 x;
        for (int k = 0; k < 4; ++k) x[k] = c0 * v[0][k] + c1 * v[1][k] + c2 * v[2][k];
        if (x[0] <= 0) continue;
        if (sa.norm(x) == target) found.push_back(x);
      }
  std::sort(found.begin(), found.end());
  std::map<Vec4, std::size_t> index;
  for (std::size_t i = 0; i < found.size(); ++i) index[found[i]] = i;

  long h = opts.unit_height;
  for (;;) {
    auto units = bounded_units(o, h);
    res.unit_height = h;
    res.unit_count = units.size();
    UnionFind uf(found.size());
    for (const auto& beta : units) {
      Vec4 u = scaled(beta, scale), us = scaled(inv.apply(beta), scale);
      for (std::size_t i = 0; i < found.size(); ++i) {
        auto t = sa.mul(us, found[i]);
        if (!t) continue;
        auto img = sa.mul(*t, u);
        if (!img) continue;
        auto it = index.find(*img);
        if (it != index.end()) uf.unite(i, it->second);
      }
    }
    std::map<std::size_t, std::vector<Quaternion>> groups;
    for (std::size_t i = 0; i < found.size(); ++i)
      groups[uf.find(i)].push_back(unscaled(alg, found[i], scale));
    res.classes.clear();
    for (auto& [root, members] : groups) {
      std::sort(members.begin(), members.end(), height_less);
      res.classes.push_back(std::move(members));
    }
    std::sort(res.classes.begin(), res.classes.end(),
              [](const auto& x, const auto& y) { return height_less(x.front(), y.front()); });
    if (!opts.expected_classes) break;
    long expected = *opts.expected_classes;
    res.certified = static_cast<long>(res.classes.size()) == expected;
    if (static_cast<long>(res.classes.size()) <= expected || 2 * h > opts.max_unit_height) break;
    h *= 2;
  }
  return res;
}

}  // namespace g2qm
