#pragma once

#include <utility>
#include <vector>

#include "lwq/field.hpp"

namespace lwq {

/// Point evaluators for the discrete derivative and averaging operators.
/// Each is defined wherever its stencil neighbors are in storage; composites
/// are formed by composing the one-step evaluators, never hand-expanded.
namespace ops {

inline double d1p(const Field2D& u, int j, int k) { return u.at(j + 1, k) - u.at(j, k); }
inline double d1m(const Field2D& u, int j, int k) { return u.at(j, k) - u.at(j - 1, k); }
inline double d2p(const Field2D& u, int j, int k) { return u.at(j, k + 1) - u.at(j, k); }
inline double d2m(const Field2D& u, int j, int k) { return u.at(j, k) - u.at(j, k - 1); }
inline double d10(const Field2D& u, int j, int k) { return 0.5 * (d1p(u, j, k) + d1m(u, j, k)); }
inline double d20(const Field2D& u, int j, int k) { return 0.5 * (d2p(u, j, k) + d2m(u, j, k)); }
inline double lap1(const Field2D& u, int j, int k) { return d1p(u, j, k) - d1p(u, j - 1, k); }
inline double lap2(const Field2D& u, int j, int k) { return d2p(u, j, k) - d2p(u, j, k - 1); }
inline double a1p(const Field2D& u, int j, int k) { return 0.5 * (u.at(j, k) + u.at(j + 1, k)); }
inline double a1m(const Field2D& u, int j, int k) { return 0.5 * (u.at(j - 1, k) + u.at(j, k)); }
inline double a2p(const Field2D& u, int j, int k) { return 0.5 * (u.at(j, k) + u.at(j, k + 1)); }
inline double a2m(const Field2D& u, int j, int k) { return 0.5 * (u.at(j, k - 1) + u.at(j, k)); }

// Composites used by the schemes and the energy bookkeeping.
inline double d1p_d2p(const Field2D& u, int j, int k) {
  return d2p(u, j + 1, k) - d2p(u, j, k);
}
inline double d1m_d2p(const Field2D& u, int j, int k) {
  return d2p(u, j, k) - d2p(u, j - 1, k);
}
inline double d1p_d2m(const Field2D& u, int j, int k) {
  return d2m(u, j + 1, k) - d2m(u, j, k);
}
inline double d1m_d2m(const Field2D& u, int j, int k) {
  return d2m(u, j, k) - d2m(u, j - 1, k);
}
inline double d10_d20(const Field2D& u, int j, int k) {
  return 0.5 * (d20(u, j + 1, k) - d20(u, j - 1, k));
}
inline double lap1_lap2(const Field2D& u, int j, int k) {
  return lap2(u, j + 1, k) - 2.0 * lap2(u, j, k) + lap2(u, j - 1, k);
}
inline double d2p_lap1(const Field2D& u, int j, int k) {
  return lap1(u, j, k + 1) - lap1(u, j, k);
}
inline double d1p_lap2(const Field2D& u, int j, int k) {
  return lap2(u, j + 1, k) - lap2(u, j, k);
}
inline double d2p_d10(const Field2D& u, int j, int k) {
  return d10(u, j, k + 1) - d10(u, j, k);
}
inline double d1p_d20(const Field2D& u, int j, int k) {
  return d20(u, j + 1, k) - d20(u, j, k);
}

}  // namespace ops

enum class StencilOp {
  D1Plus, D1Minus, D2Plus, D2Minus,
  D1Zero, D2Zero,
  Lap1, Lap2,
  A1Plus, A1Minus, A2Plus, A2Minus,
};

/// Applies `op` at an interior index (j >= 0, k >= 0). Throws std::out_of_range
/// if a stencil neighbor falls outside storage.
double apply(StencilOp op, const Field2D& field, int j, int k);

struct IdentityPair {
  double lhs;
  double rhs;
};

/// Both sides of the discrete integration by parts formula
///   sum_{j>=1} (Lap U_j) V_j = -sum_{j>=1} (D+ U_j)(D+ V_j) - (D+ U_0) V_1
/// for finite sequences indexed j >= 0 with support away from the tail.
IdentityPair telescoping_ipp_1d(const std::vector<double>& U,
                                const std::vector<double>& V);

/// Both sides of the quadrature-style identity
///   sum_{j>=1} (D0 U_j)^2 + 1/4 sum_{j>=1} (Lap U_j)^2
///     = sum_{j>=1} (D+ U_j)^2 + 1/2 (D+ U_0)^2.
IdentityPair half_weight_identity_1d(const std::vector<double>& U);

}  // namespace lwq
