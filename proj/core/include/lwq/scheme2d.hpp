#pragma once

#include <functional>
#include <vector>

#include "lwq/field.hpp"
#include "lwq/grid.hpp"

namespace lwq {

/// Values on the interior indices only (j,k >= 0), no ghost ring. Produced by
/// the step decomposition; consumed by the energy bookkeeping.
class Interior2D {
 public:
  Interior2D() = default;
  Interior2D(int nx, int ny)
      : nx_(nx), ny_(ny), data_(static_cast<size_t>(nx) * ny, 0.0) {}

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double& at(int j, int k) { return data_[static_cast<size_t>(j) * ny_ + k]; }
  double at(int j, int k) const { return data_[static_cast<size_t>(j) * ny_ + k]; }

  static Interior2D from_field(const Field2D& u) {
    Interior2D r(u.nx(), u.ny());
    for (int j = 0; j < u.nx(); ++j)
      for (int k = 0; k < u.ny(); ++k) r.at(j, k) = u.at(j, k);
    return r;
  }

 private:
  int nx_ = 0, ny_ = 0;
  std::vector<double> data_;
};

/// First-order piece of the step split: v = -alpha D1,0 u - beta D2,0 u.
Interior2D compute_v(const Field2D& u, const CflPair& cfl);

/// Second-order piece with stabilizer:
/// w = -(alpha^2/2) Lap1 u - (beta^2/2) Lap2 u - alpha beta D1,0 D2,0 u
///     + ((alpha^2+beta^2)/8) Lap1 Lap2 u.
Interior2D compute_w(const Field2D& u, const CflPair& cfl);

/// One step: u^{n+1} = u - w + v on the interior, ghosts refilled.
Field2D step_2d(const Field2D& u, const CflPair& cfl,
                CflMode mode = CflMode::explore);

/// Same step evaluated through the expanded 9-point formula; used as an
/// independent evaluation path in tests.
Field2D step_2d_direct(const Field2D& u, const CflPair& cfl);

using StepObserver = std::function<void(int step, const Field2D& state)>;

/// Applies step_2d `steps` times. The observer, if set, sees each state
/// before it is advanced (step index 0..steps-1) and the final state with
/// index `steps`.
Field2D run(const Field2D& u0, const CflPair& cfl, int steps,
            CflMode mode = CflMode::explore, const StepObserver& observer = {});

}  // namespace lwq
