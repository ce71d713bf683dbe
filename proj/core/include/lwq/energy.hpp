#pragma once

#include <vector>

#include "lwq/field.hpp"
#include "lwq/grid.hpp"
#include "lwq/scheme2d.hpp"

namespace lwq {

/// Weighted squared norm: sum_{j,k>=1} u^2 + (1/2) sum_{k>=1} u_{0k}^2
/// + (1/2) sum_{j>=1} u_{j0}^2 + (1/4) u_{00}^2.
double norm_sq(const Field2D& u);
double norm_sq(const Interior2D& a);

/// Bilinear form polarizing norm_sq (weights 1, 1/2, 1/2, 1/4 by index class).
double inner(const Interior2D& a, const Interior2D& b);

/// The two skew-symmetric pieces of the one-step energy increment, each
/// evaluated twice: as a scalar product on one side and through its closed
/// boundary-sum form on the other. The closed form of lhs2 is also returned
/// itemized (18 entries, in the order the terms appear in rhs2).
struct Lemma1Report {
  double lhs1 = 0.0, rhs1 = 0.0;  // 2<u;v> and its closed form
  double lhs2 = 0.0, rhs2 = 0.0;  // -2<v;w> and its closed form
  std::vector<double> terms2;
};
Lemma1Report lemma1_verify(const Field2D& u, const CflPair& cfl);

/// First symmetric piece: lhs = |v|^2 - 2<u;w>, rhs = its closed form,
/// itemized (16 entries).
struct Lemma2Report {
  double lhs = 0.0, rhs = 0.0;
  std::vector<double> terms;
};
Lemma2Report lemma2_verify(const Field2D& u, const CflPair& cfl);

/// Second symmetric piece: |w|^2 against its upper bound, itemized
/// (10 entries). Contract: w_norm_sq <= bound + 1e-12 (1 + bound).
struct Lemma3Report {
  double w_norm_sq = 0.0, bound = 0.0;
  std::vector<double> terms;
};
Lemma3Report lemma3_verify(const Field2D& u, const CflPair& cfl);

/// One-step energy accounting. Exact split:
///   increment = skew1 + skew2 + sym_vw + w_norm_sq,
/// and after bounding |w|^2 the grouped estimate
///   increment <= interior_I + boundary_B1 + boundary_B2 + corner_C,
/// where the four groups collect the interior, the two boundary edges and the
/// corner contributions.
struct EnergyBreakdown {
  double interior_I = 0.0;
  double boundary_B1 = 0.0;  // edge {k=0, j>=1}
  double boundary_B2 = 0.0;  // edge {j=0, k>=1}
  double corner_C = 0.0;
  double increment = 0.0;
  double skew1 = 0.0;
  double skew2 = 0.0;
  double sym_vw = 0.0;
  double w_norm_sq = 0.0;
  double w_bound = 0.0;
};
/// support_rel_tol relaxes the far-edge support check to entries below
/// support_rel_tol * max|u| (for smooth data with numerically negligible
/// tails); the default demands exact zeros.
EnergyBreakdown breakdown(const Field2D& u, const CflPair& cfl,
                          double support_rel_tol = 0.0);

/// Left side of the per-step stability estimate for a single transition
/// u -> next, with dissipation constant c.
double theorem_step_lhs(const Field2D& u, const Field2D& next,
                        const CflPair& cfl, double c);

/// Per-step stability estimate with dissipation constant c:
///   |u^{n+1}|^2 - |u^n|^2 + c alpha^2 sum_{j,k>=1} (Lap1 u)^2
///   + c beta^2 sum_{j,k>=1} (Lap2 u)^2 + c |alpha| sum_{k>=0} u_{0k}^2
///   + c |beta| sum_{j>=0} u_{j0}^2  <=  0.
/// PASS iff the maximum of the left side over all steps stays below
/// 1e-12 (1 + |u^0|^2).
struct TheoremReport {
  double max_lhs = 0.0;
  double tol = 0.0;
  double initial_norm_sq = 0.0;
  bool pass = false;
  bool strict_admissible = false;
  std::vector<double> per_step;
};
TheoremReport theorem1_check(const Field2D& u0, const CflPair& cfl, int steps,
                             double c = 0.1, CflMode mode = CflMode::strict);

}  // namespace lwq
