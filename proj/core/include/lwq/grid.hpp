#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace lwq {

/// Uniform grid on the quarter-plane: nx-by-ny interior cells plus a one-cell
/// ghost ring. ny = 1 is allowed for 1D runs.
struct GridSpec {
  int nx = 0;
  int ny = 1;
  double dx = 1.0;
  double dy = 1.0;
  double dt = 1.0;

  double lambda() const { return dt / dx; }
  double mu() const { return dt / dy; }

  void validate_1d() const {
    if (nx < 3) throw std::invalid_argument("GridSpec: nx must be >= 3");
    if (!(dx > 0.0 && dt > 0.0))
      throw std::invalid_argument("GridSpec: dx and dt must be positive");
  }
  void validate_2d() const {
    validate_1d();
    if (ny < 3) throw std::invalid_argument("GridSpec: ny must be >= 3 for 2D runs");
    if (!(dy > 0.0)) throw std::invalid_argument("GridSpec: dy must be positive");
  }
};

/// Signed Courant numbers alpha = lambda*a, beta = mu*b for outflow transport
/// (a, b < 0), together with the comparability constant M and the radius of
/// the small-parameter ball used by the strict admission mode.
struct CflPair {
  double alpha = 0.0;
  double beta = 0.0;
  double a = 0.0;
  double b = 0.0;
  double bound_m = 2.0;
  double radius_eps = 0.25;

  static CflPair from_speeds(double a, double b, const GridSpec& g,
                             double bound_m = 2.0, double radius_eps = 0.25) {
    CflPair c;
    c.a = a;
    c.b = b;
    c.alpha = g.lambda() * a;
    c.beta = g.mu() * b;
    c.bound_m = bound_m;
    c.radius_eps = radius_eps;
    return c;
  }

  static CflPair from_courant(double alpha, double beta, double bound_m = 2.0,
                              double radius_eps = 0.25) {
    CflPair c;
    c.alpha = alpha;
    c.beta = beta;
    c.a = alpha;  // unit lambda, mu
    c.b = beta;
    c.bound_m = bound_m;
    c.radius_eps = radius_eps;
    return c;
  }

  bool outflow() const { return alpha < 0.0 && beta < 0.0; }
  bool comparable() const {
    return std::abs(alpha) <= bound_m * std::abs(beta) &&
           std::abs(beta) <= bound_m * std::abs(alpha);
  }
  bool inside_cauchy_ball() const { return alpha * alpha + beta * beta <= 0.5; }
  bool inside_eps_ball() const {
    return alpha * alpha + beta * beta <= radius_eps;
  }
};

/// Admission policy for the time stepper. `strict` enforces the hypotheses of
/// the quarter-plane stability estimate (comparability and the eps-ball);
/// `explore` only enforces the Cauchy stability ball, for parameter-region
/// experiments.
enum class CflMode { strict, explore };

inline void admit_cfl(const CflPair& cfl, CflMode mode) {
  if (!cfl.outflow())
    throw std::invalid_argument("CFL: alpha and beta must be negative (outflow)");
  if (!cfl.inside_cauchy_ball())
    throw std::invalid_argument(
        "CFL: alpha^2 + beta^2 = " +
        std::to_string(cfl.alpha * cfl.alpha + cfl.beta * cfl.beta) +
        " exceeds the Cauchy stability ball 1/2");
  if (mode == CflMode::strict) {
    if (!cfl.comparable())
      throw std::invalid_argument("CFL: |alpha|, |beta| not comparable with M = " +
                                  std::to_string(cfl.bound_m));
    if (!cfl.inside_eps_ball())
      throw std::invalid_argument("CFL: alpha^2 + beta^2 exceeds eps = " +
                                  std::to_string(cfl.radius_eps));
  }
}

}  // namespace lwq
