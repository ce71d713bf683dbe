#pragma once

#include <functional>
#include <vector>

#include "lwq/grid.hpp"

namespace lwq {

/// 1D state on j in {-1, 0, ..., nx-1, nx}: nx interior cells plus one ghost
/// slot at each end. Ghosts follow second-order extrapolation.
class Field1D {
 public:
  Field1D() = default;
  explicit Field1D(int nx) : nx_(nx), data_(static_cast<size_t>(nx) + 2, 0.0) {
    if (nx < 3) throw std::invalid_argument("Field1D: nx must be >= 3");
  }

  int nx() const { return nx_; }
  double& at(int j) { return data_[static_cast<size_t>(j + 1)]; }
  double at(int j) const { return data_[static_cast<size_t>(j + 1)]; }

  /// u(-1) = 2 u(0) - u(1), and the mirrored rule at the artificial far edge.
  void fill_ghosts() {
    at(-1) = 2.0 * at(0) - at(1);
    at(nx_) = 2.0 * at(nx_ - 1) - at(nx_ - 2);
  }

 private:
  int nx_ = 0;
  std::vector<double> data_;
};

/// 2D state on (j,k) in {-1..nx} x {-1..ny}: interior nx-by-ny cells plus a
/// one-cell ghost ring. Interior indices are j,k >= 0; the strict interior is
/// j,k >= 1. Ghosts at j=-1 / k=-1 (and symmetrically at the far edges)
/// follow second-order extrapolation; ghost corners follow the bilinear
/// corner rule.
class Field2D {
 public:
  Field2D() = default;
  Field2D(int nx, int ny)
      : nx_(nx),
        ny_(ny),
        stride_(static_cast<size_t>(ny) + 2),
        data_(static_cast<size_t>(nx + 2) * (ny + 2), 0.0) {
    if (nx < 3 || ny < 3)
      throw std::invalid_argument("Field2D: nx and ny must be >= 3");
  }

  int nx() const { return nx_; }
  int ny() const { return ny_; }

  double& at(int j, int k) {
    return data_[static_cast<size_t>(j + 1) * stride_ +
                 static_cast<size_t>(k + 1)];
  }
  double at(int j, int k) const {
    return data_[static_cast<size_t>(j + 1) * stride_ +
                 static_cast<size_t>(k + 1)];
  }

  bool in_storage(int j, int k) const {
    return j >= -1 && j <= nx_ && k >= -1 && k <= ny_;
  }

  void fill_ghosts();

 private:
  int nx_ = 0, ny_ = 0;
  size_t stride_ = 0;
  std::vector<double> data_;
};

void fill_ghosts_1d(Field1D& f);
void fill_ghosts_2d(Field2D& f);

/// Cell-average projection of u0 on each interior cell (tensor 2-point Gauss),
/// ghosts filled by extrapolation. Throws on a non-finite sample, naming the
/// cell.
Field2D project_initial_2d(const std::function<double(double, double)>& u0,
                           const GridSpec& grid);

Field1D project_initial_1d(const std::function<double(double)>& u0,
                           const GridSpec& grid);

/// Largest interior value magnitude.
double max_abs(const Field2D& u);

/// True iff every entry with j >= nx-margin or k >= ny-margin is zero up to
/// rel_tol * max|u|. The energy verifiers require this so that truncating the
/// quarter-plane sums to the grid introduces no error.
bool support_clear_of_far_edges(const Field2D& u, int margin = 3,
                                double rel_tol = 0.0);

bool support_clear_of_far_edge_1d(const Field1D& u, int margin = 3,
                                  double rel_tol = 0.0);

}  // namespace lwq
