#pragma once

#include "gperiods/real.hpp"

namespace gp {

struct QuadResult {
  Real value;
  Real err_estimate;  // level-to-level difference at the accepted level
  long evaluations = 0;
  bool converged = false;
  int levels = 0;
};

struct CQuadResult {
  CReal value;
  Real err_estimate;
  long evaluations = 0;
  bool converged = false;
  int levels = 0;
};

// I_s = 2 * int_0^1 dx / sqrt(1 - x^s) by tanh-sinh quadrature, s >= 1.
QuadResult period_quad(const Frac& s, long digits);

// I_{n/k} in integral form: 2k * int_0^1 x^{k-1} dx / sqrt(1 - x^n),
// n >= 1, 1 <= k <= n.
QuadResult period_quad_nk(long n, long k, long digits);

// int over the straight chord from 1 to exp(2 pi i / n) of dx / sqrt(1 - x^n)
// with the principal square root, n >= 2.
CQuadResult branch_chord_integral(long n, long digits);

struct SymmetryReport {
  CQuadResult chord;  // lhs
  CReal expected;     // (1 - zeta_n) I_n / 2
  CReal ratio;        // lhs / expected
  Real abs_ratio;
  Real phase;         // radians
  bool converged = false;
};

// Ratio of the chord integral to its rotation-symmetry prediction.
SymmetryReport branch_symmetry_ratio(long n, long digits);

}  // namespace gp
