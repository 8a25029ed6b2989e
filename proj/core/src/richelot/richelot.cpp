#include "g2qm/richelot/richelot.hpp"

#include <algorithm>
#include <memory>

namespace g2qm {

namespace {

using Cubic = std::array<QuadElem, 3>;

// Element of L = K[T] / (m(T)), m monic cubic.
class CubicElem {
 public:
  CubicElem() = default;
  CubicElem(std::shared_ptr<const Cubic> m, const QuadElem& k) : m_(std::move(m)) {
    c_.fill(QuadElem(k.delta()));
    c_[0] = k;
  }
  CubicElem(std::shared_ptr<const Cubic> m, const PolyQF& f) : CubicElem(m, QuadElem(f[0].delta())) {
    CubicElem t = generator(m_), acc(m_, f.leading());
    for (int i = f.degree() - 1; i >= 0; --i) acc = acc * t + CubicElem(m_, f[i]);
    c_ = acc.c_;
  }
  static CubicElem generator(std::shared_ptr<const Cubic> m) {
    CubicElem e(m, QuadElem((*m)[0].delta()));
    e.c_[1] = QuadElem(1, (*m)[0].delta());
    return e;
  }

  const std::shared_ptr<const Cubic>& modulus() const { return m_; }
  long delta() const { return c_[0].delta(); }
  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const QuadElem& x) { return x.is_zero(); });
  }
  std::optional<QuadElem> constant() const {
    if (!c_[1].is_zero() || !c_[2].is_zero()) return std::nullopt;
    return c_[0];
  }

  CubicElem& operator+=(const CubicElem& o) {
    for (int t = 0; t < 3; ++t) c_[t] += o.c_[t];
    return *this;
  }
  CubicElem& operator-=(const CubicElem& o) {
    for (int t = 0; t < 3; ++t) c_[t] -= o.c_[t];
    return *this;
  }
  friend CubicElem operator+(CubicElem a, const CubicElem& b) { return a += b; }
  friend CubicElem operator-(CubicElem a, const CubicElem& b) { return a -= b; }
  CubicElem operator-() const {
    CubicElem r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend CubicElem operator*(const CubicElem& a, const CubicElem& b) {
    const Cubic& m = *a.m_;
    std::vector<QuadElem> p(5, QuadElem(a.delta()));
    for (int t = 0; t < 3; ++t)
      for (int s = 0; s < 3; ++s) p[t + s] += a.c_[t] * b.c_[s];
    for (int t = 4; t >= 3; --t) {
      QuadElem c = p[t];
      p[t - 1] -= c * m[2];
      p[t - 2] -= c * m[1];
      p[t - 3] -= c * m[0];
    }
    CubicElem r(a.m_, p[0]);
    r.c_[1] = p[1];
    r.c_[2] = p[2];
    return r;
  }
  friend bool operator==(const CubicElem& a, const CubicElem& b) { return a.c_ == b.c_; }

 private:
  std::shared_ptr<const Cubic> m_;
  std::array<QuadElem, 3> c_;
};

}  // namespace

template <>
struct FieldTraits<CubicElem> {
  static CubicElem zero(const CubicElem& like) {
    return CubicElem(like.modulus(), QuadElem(like.delta()));
  }
  static CubicElem from_rational(const CubicElem& like, const Rational& q) {
    return CubicElem(like.modulus(), QuadElem(q, like.delta()));
  }
  static bool is_zero(const CubicElem& x) { return x.is_zero(); }
};

namespace {

// The three conjugate quadratics at T, r(T), r(r(T)); the first one times lc.
std::array<Poly<CubicElem>, 3> cubic_quadratics(const CubicPacking& pk, const QuadElem& lc) {
  auto m = std::make_shared<const Cubic>(pk.m);
  CubicElem t = CubicElem::generator(m);
  CubicElem r(m, pk.shift);
  std::array<CubicElem, 3> roots{t, r, CubicElem(m, pk.shift)};
  // r(r(T)): evaluate the shift polynomial at r
  CubicElem acc(m, pk.shift.leading());
  for (int i = pk.shift.degree() - 1; i >= 0; --i) acc = acc * r + CubicElem(m, pk.shift[i]);
  roots[2] = acc;
  std::array<Poly<CubicElem>, 3> out;
  for (int k = 0; k < 3; ++k) {
    std::vector<CubicElem> co;
    for (int i = 0; i < 3; ++i) {
      const PolyQF& f = pk.coeff[i];
      CubicElem v(m, f.leading());
      for (int e = f.degree() - 1; e >= 0; --e) v = v * roots[k] + CubicElem(m, f[e]);
      co.push_back(v);
    }
    out[k] = Poly<CubicElem>(std::move(co));
  }
  out[0] = out[0] * CubicElem(m, lc);
  return out;
}

std::optional<CubicPacking> pack(const std::array<PolyC, 3>& monic, long delta,
                                 const ReconstructConfig& cfg) {
  const int digits = cfg.digits;
  const BigComplex zero(digits), one(Real(1), Real(0), digits);
  auto coeff = [&](int k, int i) { return monic[k].coeff(i); };  // i: 0 = p, 1 = s, 2 = a
  for (int c = 0; c < 6; ++c) {
    std::array<BigComplex, 3> th;
    Real cc = c;
    for (int k = 0; k < 3; ++k) th[k] = coeff(k, 1) + coeff(k, 0) * cc + coeff(k, 2) * (cc * cc);
    bool separated = true;
    for (int k = 0; k < 3; ++k)
      for (int l = k + 1; l < 3; ++l)
        if ((th[k] - th[l]).abs() < pow10(-digits / 4)) separated = false;
    if (!separated) continue;

    PolyC m = PolyC::linear_factor(th[0], one) * PolyC::linear_factor(th[1], one) *
              PolyC::linear_factor(th[2], one);
    CubicPacking pk;
    for (int i = 0; i < 3; ++i) {
      auto r = recognize_qf_element(m[i], delta, cfg.max_denominator, cfg.tolerance());
      if (!r) return std::nullopt;
      pk.m[i] = *r;
    }
    // Lagrange interpolation through (th_k, value_k): the three coefficients, then the
    // cyclic shift th_k -> th_(k+1)
    for (int i = 0; i < 4; ++i) {
      PolyC acc = PolyC::constant(zero);
      for (int k = 0; k < 3; ++k) {
        PolyC basis = PolyC::constant(i < 3 ? coeff(k, i) : th[(k + 1) % 3]);
        for (int l = 0; l < 3; ++l)
          if (l != k) basis = basis * PolyC({-th[l] / (th[k] - th[l]), one / (th[k] - th[l])});
        acc += basis;
      }
      std::vector<QuadElem> co;
      for (int e = 0; e < 3; ++e) {
        auto r = recognize_qf_element(acc.coeff(e), delta, cfg.max_denominator, cfg.tolerance());
        if (!r) return std::nullopt;
        co.push_back(*r);
      }
      (i < 3 ? pk.coeff[i] : pk.shift) = PolyQF(std::move(co));
    }
    return pk;
  }
  return std::nullopt;
}

}  // namespace
namespace {

template <class T>
Poly<T> bracket(const Poly<T>& a, const Poly<T>& b) {
  return a.derivative() * b - a * b.derivative();
}

template <class T>
T det3(const std::array<Poly<T>, 3>& m) {
  auto e = [&](int r, int c) { return m[r].coeff(c); };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
         e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

template <class T>
Poly<T> image(const std::array<Poly<T>, 3>& pqr, const T& delta) {
  const auto& [p, q, r] = pqr;
  Poly<T> g = bracket(q, r) * bracket(r, p) * bracket(p, q);
  return g * (field_const(delta, 1) / delta);
}

bool has_infinity(const BranchPoints& bp, const std::pair<int, int>& pr) {
  return bp.infinity && (pr.first == 5 || pr.second == 5);
}

}  // namespace

std::vector<std::array<std::pair<int, int>, 3>> all_pairings() {
  std::vector<std::array<std::pair<int, int>, 3>> out;
  for (int b = 1; b < 6; ++b) {
    std::vector<int> rest;
    for (int k = 1; k < 6; ++k)
      if (k != b) rest.push_back(k);
    for (int e = 1; e < 4; ++e) {
      std::vector<int> last;
      for (int k = 1; k < 4; ++k)
        if (k != e) last.push_back(rest[k]);
      out.push_back({{{0, b}, {rest[0], rest[e]}, {last[0], last[1]}}});
    }
  }
  return out;
}

QuadraticGrouping make_grouping(const CurveModel& c, const BranchPoints& bp,
                                const std::array<std::pair<int, int>, 3>& pairs,
                                const ReconstructConfig& cfg) {
  const int digits = cfg.digits;
  const long delta = c.delta();
  QuadraticGrouping g;
  g.pairs = pairs;
  for (auto& pr : g.pairs)
    if (pr.first > pr.second) std::swap(pr.first, pr.second);

  const BigComplex one(Real(1), Real(0), digits);
  std::array<PolyC, 3> monic;
  for (int k = 0; k < 3; ++k) {
    const auto& pr = g.pairs[k];
    const BigComplex& x = bp.roots[pr.first];
    if (has_infinity(bp, pr)) {
      monic[k] = PolyC::linear_factor(x, one);
    } else {
      const BigComplex& y = bp.roots[pr.second];
      monic[k] = PolyC({x * y, -(x + y), one});
    }
  }
  const QuadElem& lc = c.poly().leading();
  g.numeric = monic;
  g.numeric[0] = g.numeric[0] * lc.embed(digits);

  // quadratics defined over K one by one
  bool split = true;
  std::array<PolyQF, 3> quad;
  for (int k = 0; k < 3 && split; ++k) {
    std::vector<QuadElem> co;
    for (const auto& x : monic[k].coeffs()) {
      auto r = recognize_qf_element(x, delta, cfg.max_denominator, cfg.tolerance());
      if (!r) {
        split = false;
        break;
      }
      co.push_back(*r);
    }
    if (split) quad[k] = PolyQF(std::move(co));
  }
  if (split) {
    quad[0] = quad[0] * lc;
    split = quad[0] * quad[1] * quad[2] == c.poly();
  }
  if (split) {
    g.split = true;
    g.quadratics = quad;
  }

  // Cyclically permuted pairs: certify m(r(T)) = 0 and lc q1 q2 q3 = F in K[T]/(m)
  if (auto pk = pack(monic, delta, cfg)) {
    auto m = std::make_shared<const Cubic>(pk->m);
    CubicElem r(m, pk->shift);
    CubicElem mr = r * r * r + CubicElem(m, pk->m[2]) * r * r + CubicElem(m, pk->m[1]) * r +
                   CubicElem(m, pk->m[0]);
    auto tq = cubic_quadratics(*pk, lc);
    Poly<CubicElem> prod = tq[0] * tq[1] * tq[2];
    bool ok = mr.is_zero() && prod.degree() <= 6;
    for (int i = 0; ok && i <= 6; ++i) {
      auto k = prod.coeff(i).constant();
      ok = k && *k == c.poly().coeff(i);
    }
    if (ok) {
      g.exact = true;
      g.packing = *pk;
    }
  }
  g.exact = g.exact || g.split;
  return g;
}

std::vector<QuadraticGrouping> enumerate_groupings(const CurveModel& c, const BranchPoints& bp,
                                                   const ReconstructConfig& cfg) {
  std::vector<QuadraticGrouping> out;
  for (const auto& p : all_pairings()) out.push_back(make_grouping(c, bp, p, cfg));
  return out;
}

RichelotImage<QuadElem> richelot_step(const std::array<PolyQF, 3>& pqr) {
  QuadElem d = det3(pqr);
  if (d.is_zero()) throw DegenerateGrouping("Richelot determinant vanishes");
  return {d, image(pqr, d)};
}

RichelotImage<QuadElem> richelot_step(const QuadraticGrouping& g, const QuadElem& leading) {
  if (g.split) return richelot_step(g.quadratics);
  if (!g.exact || !g.packing) throw std::invalid_argument("grouping is not defined over the base field");
  auto tq = cubic_quadratics(*g.packing, leading);
  auto d = det3(tq).constant();
  if (!d) throw std::logic_error("Richelot determinant left the base field");
  if (d->is_zero()) throw DegenerateGrouping("Richelot determinant vanishes");
  const auto& [p, q, r] = tq;
  Poly<CubicElem> uvw = bracket(q, r) * bracket(r, p) * bracket(p, q);
  QuadElem inv = d->inverse();
  std::vector<QuadElem> co;
  for (const auto& x : uvw.coeffs()) {
    auto k = x.constant();
    if (!k) throw std::logic_error("Richelot image left the base field");
    co.push_back(*k * inv);
  }
  return {*d, PolyQF(std::move(co))};
}

RichelotImage<BigComplex> richelot_step(const std::array<PolyC, 3>& pqr, int digits) {
  BigComplex d = det3(pqr);
  Real size = 1;
  for (const auto& p : pqr)
    for (const auto& c : p.coeffs()) size = std::max(size, c.abs());
  if (d.abs() < pow10(-digits / 2) * size * size * size)
    throw DegenerateGrouping("Richelot determinant vanishes");
  return {d, image(pqr, d)};
}

std::vector<IdentityResidual> verify_isogeny_periods(const BranchPoints& c, const BranchPoints& im,
                                                     const std::vector<PeriodIdentity>& pairing,
                                                     int digits) {
  std::vector<IdentityResidual> out;
  for (const auto& id : pairing) {
    auto l = integrate_segment(c, id.a, id.b, digits);
    auto r = integrate_segment(im, id.p, id.q, digits);
    Real f = id.factor;
    IdentityResidual res{id, {}};
    res.residual[0] = (l.dx - r.dx * f).abs() / std::max(Real(1), l.dx.abs());
    res.residual[1] = (l.xdx - r.xdx * f).abs() / std::max(Real(1), l.xdx.abs());
    out.push_back(res);
  }
  return out;
}

std::vector<IdentityResidual> discover_isogeny_periods(
    const BranchPoints& c, const BranchPoints& im,
    std::optional<std::vector<std::pair<int, int>>> sources, int digits) {
  const int n = static_cast<int>(c.roots.size());
  const int m = static_cast<int>(im.roots.size());
  if (!sources) {
    sources.emplace();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) sources->emplace_back(a, b);
  }
  std::vector<std::pair<std::pair<int, int>, SegmentIntegral>> targets;
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) {
      try {
        targets.push_back({{p, q}, integrate_segment(im, p, q, digits)});
      } catch (const NumericalFailure&) {
        // segment through another branch point: not a usable target
      }
    }
  const Real tol = pow10(-digits + 15);
  std::vector<IdentityResidual> out;
  for (const auto& [a, b] : *sources) {
    SegmentIntegral l;
    try {
      l = integrate_segment(c, a, b, digits);
    } catch (const NumericalFailure&) {
      continue;
    }
    bool matched = false;
    for (const auto& [pq, r] : targets) {
      for (int f : {1, -1, 2, -2}) {
        Real e0 = (l.dx - r.dx * Real(f)).abs() / std::max(Real(1), l.dx.abs());
        Real e1 = (l.xdx - r.xdx * Real(f)).abs() / std::max(Real(1), l.xdx.abs());
        if (e0 < tol && e1 < tol) {
          out.push_back({{a, b, pq.first, pq.second, f}, {e0, e1}});
          matched = true;
          break;
        }
      }
      if (matched) break;
    }
  }
  if (out.empty()) throw NumericalFailure("no period identity matches at this precision");
  return out;
}

std::vector<RichelotRow> richelot_table(const CurveModel& c, const ReconstructConfig& cfg) {
  const int digits = cfg.digits;
  BranchPoints bp = find_roots(c, digits);
  auto source = igusa_clebsch(embed(c.poly(), digits));
  std::vector<RichelotRow> rows;
  for (auto& g : enumerate_groupings(c, bp, cfg)) {
    RichelotRow row{std::move(g), std::nullopt, BigComplex(digits), std::nullopt, {}, false, false};
    try {
      if (row.grouping.exact) {
        auto img = richelot_step(row.grouping, c.poly().leading());
        row.delta = img.delta;
        row.delta_numeric = img.delta.embed(digits);
        row.image = img.g;
        auto ic = igusa_clebsch(img.g);
        auto abs = absolute_invariants(ic);
        for (int k = 0; k < 3; ++k) row.absolute[k] = abs[k].embed(digits);
        row.self_isogeny = same_invariants(igusa_clebsch(c.poly()), ic);
      } else {
        auto img = richelot_step(row.grouping.numeric, digits);
        row.delta_numeric = img.delta;
        auto ic = igusa_clebsch(img.g);
        row.absolute = absolute_invariants(ic);
        row.self_isogeny = same_invariants(source, ic, digits);
      }
    } catch (const DegenerateGrouping&) {
      row.degenerate = true;
    } catch (const SingularModel&) {
      row.degenerate = true;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace g2qm
