#include "lwq/scheme2d.hpp"

#include "lwq/stencils.hpp"

namespace lwq {

Interior2D compute_v(const Field2D& u, const CflPair& cfl) {
  Interior2D v(u.nx(), u.ny());
  for (int j = 0; j < u.nx(); ++j)
    for (int k = 0; k < u.ny(); ++k)
      v.at(j, k) = -cfl.alpha * ops::d10(u, j, k) - cfl.beta * ops::d20(u, j, k);
  return v;
}

Interior2D compute_w(const Field2D& u, const CflPair& cfl) {
  const double a = cfl.alpha, b = cfl.beta;
  const double ca = 0.5 * a * a, cb = 0.5 * b * b;
  const double cs = 0.125 * (a * a + b * b);
  Interior2D w(u.nx(), u.ny());
  for (int j = 0; j < u.nx(); ++j)
    for (int k = 0; k < u.ny(); ++k)
      w.at(j, k) = -ca * ops::lap1(u, j, k) - cb * ops::lap2(u, j, k) -
                   a * b * ops::d10_d20(u, j, k) +
                   cs * ops::lap1_lap2(u, j, k);
  return w;
}

Field2D step_2d(const Field2D& u, const CflPair& cfl, CflMode mode) {
  admit_cfl(cfl, mode);
  const Interior2D v = compute_v(u, cfl);
  const Interior2D w = compute_w(u, cfl);
  Field2D next(u.nx(), u.ny());
  for (int j = 0; j < u.nx(); ++j)
    for (int k = 0; k < u.ny(); ++k)
      next.at(j, k) = u.at(j, k) - w.at(j, k) + v.at(j, k);
  next.fill_ghosts();
  return next;
}

Field2D step_2d_direct(const Field2D& u, const CflPair& cfl) {
  admit_cfl(cfl, CflMode::explore);
  const double a = cfl.alpha, b = cfl.beta;
  const double s = a * a + b * b;
  // 9-point expansion of u - w + v; an independent evaluation path for tests.
  const double c00 = 1.0 - 1.5 * s;
  const double cp0 = -0.5 * a + 0.5 * a * a + 0.25 * s;
  const double cm0 = 0.5 * a + 0.5 * a * a + 0.25 * s;
  const double c0p = -0.5 * b + 0.5 * b * b + 0.25 * s;
  const double c0m = 0.5 * b + 0.5 * b * b + 0.25 * s;
  const double cpp = 0.25 * a * b - 0.125 * s;
  const double cpm = -0.25 * a * b - 0.125 * s;
  const double cmp = cpm;
  const double cmm = cpp;
  Field2D next(u.nx(), u.ny());
  for (int j = 0; j < u.nx(); ++j)
    for (int k = 0; k < u.ny(); ++k)
      next.at(j, k) = c00 * u.at(j, k) + cp0 * u.at(j + 1, k) +
                      cm0 * u.at(j - 1, k) + c0p * u.at(j, k + 1) +
                      c0m * u.at(j, k - 1) + cpp * u.at(j + 1, k + 1) +
                      cpm * u.at(j + 1, k - 1) + cmp * u.at(j - 1, k + 1) +
                      cmm * u.at(j - 1, k - 1);
  next.fill_ghosts();
  return next;
}

Field2D run(const Field2D& u0, const CflPair& cfl, int steps, CflMode mode,
            const StepObserver& observer) {
  admit_cfl(cfl, mode);
  Field2D u = u0;
  for (int n = 0; n < steps; ++n) {
    if (observer) observer(n, u);
    u = step_2d(u, cfl, mode);
  }
  if (observer) observer(steps, u);
  return u;
}

}  // namespace lwq
