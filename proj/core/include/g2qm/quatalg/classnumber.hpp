#pragma once

#include <array>
#include <vector>

#include "g2qm/exactfield/rational.hpp"

namespace g2qm {

struct BQForm {
  long a, b, c;
  long discriminant() const { return b * b - 4 * a * c; }
  friend auto operator<=>(const BQForm&, const BQForm&) = default;
};

// Reduced primitive positive definite forms of discriminant disc < 0.
std::vector<BQForm> reduced_forms(long disc);
long class_number(long disc);
// Oracle: reduces every primitive form in a coefficient box and counts distinct results.
long class_number_by_reduction(long disc);
BQForm reduce_form(BQForm f);

// Principal polarization count for an indefinite algebra of reduced discriminant D.
Integer pi_principal_count(long D);

}  // namespace g2qm
