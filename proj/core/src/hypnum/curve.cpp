#include "g2qm/hypnum/curve.hpp"

#include <stdexcept>

namespace g2qm {

bool is_squarefree(const PolyQF& f) {
  if (f.degree() < 1) return true;
  return poly_gcd(f, f.derivative()).degree() == 0;
}

CurveModel::CurveModel(PolyQF poly, std::string label)
    : poly_(std::move(poly)), label_(std::move(label)) {
  if (poly_.degree() != 5 && poly_.degree() != 6)
    throw std::invalid_argument("genus-two model needs degree 5 or 6, got " +
                                std::to_string(poly_.degree()));
  if (!is_squarefree(poly_)) throw std::invalid_argument("curve polynomial is not squarefree");
}

}  // namespace g2qm
