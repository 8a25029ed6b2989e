#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2qm/endodetect/endodetect.hpp"
#include "g2qm/hypnum/periods.hpp"
#include "g2qm/pollab/altform.hpp"

namespace g2qm {

// E_t(x, y) = E(x, t y) = E(t x, y), i.e. E * M_t.  Throws when M_t is not E-symmetric.
RatMatrix twist_form(const RatMatrix& e, const RatMatrix& mt);

// Omega E^-1 Omega^t = 0 and -i Omega E^-1 conj(Omega)^t positive definite.
bool is_polarization(const RatMatrix& e, const CMatrix& omega, int digits);

// Omega * change with the form carried along; validated against the bilinear relations.
PeriodMatrix rebase_period_matrix(const PeriodMatrix& pm, const RatMatrix& change);
PeriodMatrix rebase_period_matrix(const PeriodMatrix& pm, const RatMatrix& change,
                                  const RatMatrix& form);

// Whether (-D d, m / Q) ramifies exactly at the primes of D.
bool q_polarizability(long D, long m, long d);

// H_1 = O as a left O-module, with a Riemann form.
struct QMLattice {
  QuatOrder order;
  QuatAction action;  // in the order basis
  RatMatrix form;
  std::string label;
};

// H_1 = O with E(x, y) = trd(mu^-1 x conj(y)), scaled to a primitive integral form whose
// first nonzero entry in row 0 is positive.
QMLattice synthetic_lattice(const QuatOrder& o, const Quaternion& mu, std::string label = {});

// Checks the action matrices against the order and that E is alternating and nondegenerate.
void validate_lattice(const QMLattice& lat);

struct PrincipalCandidate {
  Quaternion gamma;
  std::size_t class_size{0};
  RatMatrix twisted;  // E * M_{gamma^-1}
  bool integral{false};
  PolarizationType type;
  RatMatrix change;   // symplectic basis for the twisted form when principal
};

struct PrincipalSearch {
  PolarizationType start_type;
  long norm{0};
  std::vector<PrincipalCandidate> principal;
  std::vector<PrincipalCandidate> rejected;
  std::optional<long> expected;  // pi(D) when the order is maximal
  bool certified{false};
  PositiveNormClasses classes;
};

struct PrincipalSearchOptions {
  EnumerateOptions enumerate;
  bool use_class_number{true};  // pass pi(D) to the enumeration when O is maximal
};

PrincipalSearch principal_search(const QMLattice& lat, const QuatInvolution& inv,
                                 const PrincipalSearchOptions& opts = {});

}  // namespace g2qm
