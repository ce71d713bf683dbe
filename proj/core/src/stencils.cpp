#include "lwq/stencils.hpp"

#include <stdexcept>
#include <string>

namespace lwq {

namespace {
void check_range(const Field2D& f, int j, int k, int rj, int rk) {
  if (j < 0 || k < 0 || !f.in_storage(j - rj, k - rk) || !f.in_storage(j + rj, k + rk))
    throw std::out_of_range("stencil apply: index (" + std::to_string(j) + "," +
                            std::to_string(k) + ") out of range");
}
}  // namespace

double apply(StencilOp op, const Field2D& f, int j, int k) {
  switch (op) {
    case StencilOp::D1Plus:  check_range(f, j, k, 1, 0); return ops::d1p(f, j, k);
    case StencilOp::D1Minus: check_range(f, j, k, 1, 0); return ops::d1m(f, j, k);
    case StencilOp::D2Plus:  check_range(f, j, k, 0, 1); return ops::d2p(f, j, k);
    case StencilOp::D2Minus: check_range(f, j, k, 0, 1); return ops::d2m(f, j, k);
    case StencilOp::D1Zero:  check_range(f, j, k, 1, 0); return ops::d10(f, j, k);
    case StencilOp::D2Zero:  check_range(f, j, k, 0, 1); return ops::d20(f, j, k);
    case StencilOp::Lap1:    check_range(f, j, k, 1, 0); return ops::lap1(f, j, k);
    case StencilOp::Lap2:    check_range(f, j, k, 0, 1); return ops::lap2(f, j, k);
    case StencilOp::A1Plus:  check_range(f, j, k, 1, 0); return ops::a1p(f, j, k);
    case StencilOp::A1Minus: check_range(f, j, k, 1, 0); return ops::a1m(f, j, k);
    case StencilOp::A2Plus:  check_range(f, j, k, 0, 1); return ops::a2p(f, j, k);
    case StencilOp::A2Minus: check_range(f, j, k, 0, 1); return ops::a2m(f, j, k);
  }
  throw std::invalid_argument("stencil apply: unknown operator tag");
}

IdentityPair telescoping_ipp_1d(const std::vector<double>& U,
                                const std::vector<double>& V) {
  if (U.size() != V.size())
    throw std::invalid_argument("telescoping_ipp_1d: length mismatch");
  if (U.size() < 3)
    throw std::invalid_argument("telescoping_ipp_1d: need at least 3 entries");
  const int last = static_cast<int>(U.size()) - 2;  // largest j with j+1 stored
  double lhs = 0.0;
  for (int j = 1; j <= last; ++j)
    lhs += (U[j + 1] - 2.0 * U[j] + U[j - 1]) * V[j];
  double rhs = 0.0;
  for (int j = 1; j <= last; ++j)
    rhs -= (U[j + 1] - U[j]) * (V[j + 1] - V[j]);
  rhs -= (U[1] - U[0]) * V[1];
  return {lhs, rhs};
}

IdentityPair half_weight_identity_1d(const std::vector<double>& U) {
  if (U.size() < 3)
    throw std::invalid_argument("half_weight_identity_1d: need at least 3 entries");
  const int last = static_cast<int>(U.size()) - 2;
  double lhs = 0.0;
  for (int j = 1; j <= last; ++j) {
    const double d0 = 0.5 * (U[j + 1] - U[j - 1]);
    const double lap = U[j + 1] - 2.0 * U[j] + U[j - 1];
    lhs += d0 * d0 + 0.25 * lap * lap;
  }
  double rhs = 0.0;
  for (int j = 1; j <= last; ++j) {
    const double dp = U[j + 1] - U[j];
    rhs += dp * dp;
  }
  rhs += 0.5 * (U[1] - U[0]) * (U[1] - U[0]);
  return {lhs, rhs};
}

}  // namespace lwq
