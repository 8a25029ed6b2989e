#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "g2qm/hypnum/curve.hpp"
#include "g2qm/hypnum/periods.hpp"
#include "g2qm/pollab/polarization.hpp"

namespace g2qm {

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Curve file: {"delta", "coefficients": [[a, b]] x 7 ascending, "label"} plus optional
// "loops": [[from, to, sign]] with 1-based branch points, and optional analytic
// representations "endomorphisms": {"a", "b", "ti", "tj"} as 2x2 matrices of [a, b].
struct CurveFile {
  CurveModel curve;
  std::optional<std::vector<Loop>> loops;
  std::optional<QuatAlgebra> algebra;
  std::optional<QFMatrix> ti;
  std::optional<QFMatrix> tj;
};

CurveFile parse_curve_file(std::string_view text);
CurveFile read_curve_file(const std::string& path);
std::string curve_json(const CurveModel& c);

// Lattice file: {"algebra": [a, b], "order": 4 quaternions, "label"} with either
// "mi", "mj", "form" given explicitly, or "mu" for the trace form trd(mu^-1 x conj(y)).
QMLattice parse_lattice_file(std::string_view text);
QMLattice read_lattice_file(const std::string& path);

// Accepts "1,2;3,4" style 1-based loop lists for the command line.
std::vector<Loop> parse_loops(std::string_view text);

// Serialized forms; every function returns one JSON value.
std::string json_quad(const QuadElem& x);           // ["a", "b", delta]
std::string json_complex(const BigComplex& z, int digits);  // ["re", "im"]
std::string json_quaternion(const Quaternion& x);   // {"algebra": [a, b], "coords": [...]}
std::string json_matrix(const RatMatrix& m);
std::string json_period_matrix(const PeriodMatrix& pm, int digits);

std::string read_text_file(const std::string& path);

}  // namespace g2qm
