#pragma once

#include <array>

#include "lwq/field.hpp"

namespace lwq {

/// One step of the 1D Lax-Wendroff scheme with second-order extrapolation
/// ghosts. Requires |alpha| in (0,1); the result has its ghosts refilled.
Field1D step_1d(const Field1D& state, double alpha);

/// sum_{j>=0} u_j^2
double energy_standard_1d(const Field1D& state);
/// (1/2) u_0^2 + sum_{j>=1} u_j^2
double energy_modified_1d(const Field1D& state, double corner_weight = 0.5);

/// Boundary quadratic term of the one-step energy balance, evaluated on
/// (u_0, u_1), together with its symmetric 2x2 matrix in that basis.
/// modified=false: the standard-energy balance term (indefinite);
/// modified=true: the half-weight balance term (negative definite).
struct BoundaryForm1D {
  double value;
  // Symmetric matrix [[m00, m01], [m01, m11]] over (u_0, u_1).
  double m00, m01, m11;
  std::array<double, 2> eigenvalues() const;
};
BoundaryForm1D boundary_form_1d(const Field1D& state, double alpha,
                                bool modified);

/// Residual of the one-step energy identity
///   E(u^{n+1}) - E(u^n) = -alpha^2 (1-alpha^2)/4 * sum (Lap u_j)^2 + boundary
/// for the chosen energy. Vanishes to round-off; the state's support must
/// stay clear of the artificial far edge.
double energy_balance_residual_1d(const Field1D& state, double alpha,
                                  bool modified);

}  // namespace lwq
