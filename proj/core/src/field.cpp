#include "lwq/field.hpp"

#include <cmath>
#include <string>

namespace lwq {

void Field2D::fill_ghosts() {
  // Edges first: second-order extrapolation normal to each edge.
  for (int k = 0; k < ny_; ++k) {
    at(-1, k) = 2.0 * at(0, k) - at(1, k);
    at(nx_, k) = 2.0 * at(nx_ - 1, k) - at(nx_ - 2, k);
  }
  for (int j = 0; j < nx_; ++j) {
    at(j, -1) = 2.0 * at(j, 0) - at(j, 1);
    at(j, ny_) = 2.0 * at(j, ny_ - 1) - at(j, ny_ - 2);
  }
  // Ghost corners: the bilinear corner rule, written on interior values so
  // that the stated linear combination is evaluated bit-exactly.
  at(-1, -1) = 4.0 * at(0, 0) - 2.0 * at(1, 0) - 2.0 * at(0, 1) + at(1, 1);
  at(nx_, -1) = 4.0 * at(nx_ - 1, 0) - 2.0 * at(nx_ - 2, 0) -
                2.0 * at(nx_ - 1, 1) + at(nx_ - 2, 1);
  at(-1, ny_) = 4.0 * at(0, ny_ - 1) - 2.0 * at(1, ny_ - 1) -
                2.0 * at(0, ny_ - 2) + at(1, ny_ - 2);
  at(nx_, ny_) = 4.0 * at(nx_ - 1, ny_ - 1) - 2.0 * at(nx_ - 2, ny_ - 1) -
                 2.0 * at(nx_ - 1, ny_ - 2) + at(nx_ - 2, ny_ - 2);
}

void fill_ghosts_1d(Field1D& f) { f.fill_ghosts(); }
void fill_ghosts_2d(Field2D& f) { f.fill_ghosts(); }

namespace {
constexpr double kGaussOffset = 0.28867513459481287;  // 1/(2*sqrt(3))
}

Field2D project_initial_2d(const std::function<double(double, double)>& u0,
                           const GridSpec& grid) {
  grid.validate_2d();
  Field2D f(grid.nx, grid.ny);
  const double gx = kGaussOffset * grid.dx;
  const double gy = kGaussOffset * grid.dy;
  for (int j = 0; j < grid.nx; ++j) {
    for (int k = 0; k < grid.ny; ++k) {
      const double xc = (j + 0.5) * grid.dx;
      const double yc = (k + 0.5) * grid.dy;
      double acc = 0.0;
      for (int sx : {-1, 1}) {
        for (int sy : {-1, 1}) {
          const double s = u0(xc + sx * gx, yc + sy * gy);
          if (!std::isfinite(s))
            throw std::invalid_argument("project_initial_2d: non-finite sample in cell (" +
                                        std::to_string(j) + "," + std::to_string(k) + ")");
          acc += s;
        }
      }
      f.at(j, k) = 0.25 * acc;
    }
  }
  f.fill_ghosts();
  return f;
}

Field1D project_initial_1d(const std::function<double(double)>& u0,
                           const GridSpec& grid) {
  grid.validate_1d();
  Field1D f(grid.nx);
  const double gx = kGaussOffset * grid.dx;
  for (int j = 0; j < grid.nx; ++j) {
    const double xc = (j + 0.5) * grid.dx;
    const double s0 = u0(xc - gx);
    const double s1 = u0(xc + gx);
    if (!std::isfinite(s0) || !std::isfinite(s1))
      throw std::invalid_argument("project_initial_1d: non-finite sample in cell " +
                                  std::to_string(j));
    f.at(j) = 0.5 * (s0 + s1);
  }
  f.fill_ghosts();
  return f;
}

double max_abs(const Field2D& u) {
  double m = 0.0;
  for (int j = 0; j < u.nx(); ++j)
    for (int k = 0; k < u.ny(); ++k) m = std::max(m, std::abs(u.at(j, k)));
  return m;
}

bool support_clear_of_far_edges(const Field2D& u, int margin, double rel_tol) {
  const double thresh = rel_tol * max_abs(u);
  for (int j = 0; j < u.nx(); ++j)
    for (int k = 0; k < u.ny(); ++k)
      if ((j >= u.nx() - margin || k >= u.ny() - margin) &&
          std::abs(u.at(j, k)) > thresh)
        return false;
  return true;
}

bool support_clear_of_far_edge_1d(const Field1D& u, int margin, double rel_tol) {
  double m = 0.0;
  for (int j = 0; j < u.nx(); ++j) m = std::max(m, std::abs(u.at(j)));
  const double thresh = rel_tol * m;
  for (int j = u.nx() - margin; j < u.nx(); ++j)
    if (std::abs(u.at(j)) > thresh) return false;
  return true;
}

}  // namespace lwq
