#include "lwq/scheme1d.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lwq {

Field1D step_1d(const Field1D& state, double alpha) {
  if (std::abs(alpha) >= 1.0)
    throw std::invalid_argument("step_1d: CFL violation, |alpha| = " +
                                std::to_string(std::abs(alpha)) + " must be < 1");
  const int nx = state.nx();
  Field1D next(nx);
  for (int j = 0; j < nx; ++j) {
    const double um = state.at(j - 1), u0 = state.at(j), up = state.at(j + 1);
    next.at(j) = u0 - 0.5 * alpha * (up - um) +
                 0.5 * alpha * alpha * (up - 2.0 * u0 + um);
  }
  next.fill_ghosts();
  return next;
}

double energy_standard_1d(const Field1D& state) {
  double e = 0.0;
  for (int j = 0; j < state.nx(); ++j) e += state.at(j) * state.at(j);
  return e;
}

double energy_modified_1d(const Field1D& state, double corner_weight) {
  double e = corner_weight * state.at(0) * state.at(0);
  for (int j = 1; j < state.nx(); ++j) e += state.at(j) * state.at(j);
  return e;
}

std::array<double, 2> BoundaryForm1D::eigenvalues() const {
  const double tr = m00 + m11;
  const double det = m00 * m11 - m01 * m01;
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
  return {0.5 * (tr - disc), 0.5 * (tr + disc)};
}

BoundaryForm1D boundary_form_1d(const Field1D& state, double alpha,
                                bool modified) {
  if (!(alpha < 0.0 && alpha > -1.0))
    throw std::invalid_argument("boundary_form_1d: alpha must be in (-1,0)");
  const double u0 = state.at(0), u1 = state.at(1);
  const double y = u0 - alpha * (u1 - u0);
  BoundaryForm1D f{};
  const double op = 1.0 + alpha;
  if (modified) {
    f.value = 0.5 * alpha * u0 * u0 + 0.5 * alpha * y * y;
    f.m00 = 0.5 * alpha * (1.0 + op * op);
    f.m01 = -0.5 * alpha * alpha * op;
    f.m11 = 0.5 * alpha * alpha * alpha;
  } else {
    f.value = 0.5 * (alpha - 1.0) * u0 * u0 + 0.5 * op * y * y;
    f.m00 = 0.5 * (alpha - 1.0) + 0.5 * op * op * op;
    f.m01 = -0.5 * alpha * op * op;
    f.m11 = 0.5 * alpha * alpha * op;
  }
  return f;
}

double energy_balance_residual_1d(const Field1D& state, double alpha,
                                  bool modified) {
  if (!support_clear_of_far_edge_1d(state))
    throw std::invalid_argument(
        "energy_balance_residual_1d: support touches the far edge");
  const Field1D next = step_1d(state, alpha);
  const double a2 = alpha * alpha;
  double dissip = 0.0;
  for (int j = 1; j < state.nx(); ++j) {
    const double lap = state.at(j + 1) - 2.0 * state.at(j) + state.at(j - 1);
    dissip += lap * lap;
  }
  dissip *= -0.25 * a2 * (1.0 - a2);
  const double boundary = boundary_form_1d(state, alpha, modified).value;
  const double inc = modified
                         ? energy_modified_1d(next) - energy_modified_1d(state)
                         : energy_standard_1d(next) - energy_standard_1d(state);
  return inc - dissip - boundary;
}

}  // namespace lwq
