#pragma once

#include <string>
#include <vector>

#include "g2qm/exactfield/poly.hpp"

namespace g2qm {

// Y^2 = F(X) with F of degree 5 or 6 over Q(sqrt(delta)).
class CurveModel {
 public:
  CurveModel(PolyQF poly, std::string label = {});

  const PolyQF& poly() const { return poly_; }
  const std::string& label() const { return label_; }
  long delta() const { return poly_[0].delta(); }
  int degree() const { return poly_.degree(); }

 private:
  PolyQF poly_;
  std::string label_;
};

bool is_squarefree(const PolyQF& f);

}  // namespace g2qm
