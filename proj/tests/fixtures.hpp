#pragma once

#include <string>
#include <vector>

#include "g2qm/endodetect/endodetect.hpp"
#include "g2qm/hypnum/periods.hpp"
#include "g2qm/io/json_io.hpp"
#include "g2qm/pollab/polarization.hpp"

namespace fixtures {

using namespace g2qm;

std::string data_path(const std::string& name);

// Q(sqrt(-3)) and Q(i) shorthands: (a + b sqrt(delta)) / d
QuadElem qf(long a, long b, long d, long delta = -3);

// Level 243 curve C, its Richelot image G as displayed, and the loops
// [x3,x1], [x4,x5], [x1,x2], [x5,x6] with the orientation that reproduces the displayed Omega.
CurveModel curve_243();
PolyQF ref_g();
std::vector<Loop> ref_loops();
QFMatrix t_six();        // analytic representation of the endomorphism with square 6
QFMatrix t_minus_three();  // ... with square -3

// Displayed 2x4 period matrix (truncated decimals).
std::vector<std::vector<std::pair<double, double>>> ref_omega();

// Homology matrices as printed next to the period matrix.
RatMatrix ref_m_six();
RatMatrix ref_m_minus_three();

QuatAlgebra alg_243();
QuatOrder order_243();
QuatOrder order_972();
QuatOrder order_1568();

// A_f of level 243 with the printed action of i, j and its form of type (1, 2).
QMLattice lattice_af243();
RatMatrix ref_e_gamma();
RatMatrix ref_m_symplectic();

CurveModel curve_1568_c1();

}  // namespace fixtures
