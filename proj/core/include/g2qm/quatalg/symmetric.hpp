#pragma once

#include <optional>
#include <vector>

#include "g2qm/exactfield/matrix.hpp"
#include "g2qm/quatalg/order.hpp"

namespace g2qm {

// A positive anti-involution of the algebra, stored as a matrix on (1, i, j, k) coordinates.
class QuatInvolution {
 public:
  explicit QuatInvolution(RatMatrix s);
  // Fixes 1 and i, sends j to sign*j and k to -sign*k.
  static QuatInvolution from_j_sign(int sign);

  Quaternion apply(const Quaternion& x) const;
  const RatMatrix& matrix() const { return s_; }
  // +1 or -1 when the involution has the diagonal shape above, otherwise 0.
  int j_sign() const;

 private:
  RatMatrix s_;
};

std::vector<Quaternion> symmetric_sublattice(const QuatOrder& o, const QuatInvolution& inv);
std::vector<Quaternion> symmetric_sublattice(const QuatOrder& o, int j_sign);

bool is_totally_positive_symmetric(const Quaternion& x);

struct PositiveNormClasses {
  std::vector<std::vector<Quaternion>> classes;  // each sorted, smallest height first
  long coeff_bound{0};
  long unit_height{0};
  std::size_t unit_count{0};
  bool certified{false};  // class count matched the expected count
};

struct EnumerateOptions {
  long coeff_bound{0};   // 0: 4 * d * (largest basis denominator)
  long unit_height{50};
  long max_unit_height{200};
  std::optional<long> expected_classes;
};

// Totally positive symmetric x in O with nrd(x) = d, grouped under x ~ b* x b, b a unit.
PositiveNormClasses enumerate_positive_norm_d(const QuatOrder& o, const QuatInvolution& inv,
                                              long d, const EnumerateOptions& opts = {});

// Units of O (nrd = +1 or -1) with basis coordinates bounded by height.
std::vector<Quaternion> bounded_units(const QuatOrder& o, long height);

}  // namespace g2qm
