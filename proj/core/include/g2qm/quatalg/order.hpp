#pragma once

#include <array>
#include <optional>
#include <vector>

#include "g2qm/exactfield/matrix.hpp"
#include "g2qm/quatalg/quaternion.hpp"

namespace g2qm {

class QuatOrder {
 public:
  // Validates that 1 lies in the span and that the span is closed under products.
  QuatOrder(const QuatAlgebra& alg, std::vector<Quaternion> basis);

  const QuatAlgebra& algebra() const { return alg_; }
  const std::vector<Quaternion>& basis() const { return basis_; }
  // Columns are basis elements in (1, i, j, k) coordinates.
  const RatMatrix& basis_matrix() const { return bmat_; }

  std::optional<std::array<Integer, 4>> coordinates(const Quaternion& x) const;
  bool contains(const Quaternion& x) const { return coordinates(x).has_value(); }
  Quaternion element(const std::array<Integer, 4>& c) const;
  Integer max_denominator() const;

  // Same Z-module, possibly different basis.
  bool same_lattice(const QuatOrder& other) const;

 private:
  QuatAlgebra alg_;
  std::vector<Quaternion> basis_;
  RatMatrix bmat_;
  RatMatrix binv_;
};

Integer order_discriminant(const QuatOrder& o);
bool is_maximal(const QuatOrder& o);

}  // namespace g2qm
