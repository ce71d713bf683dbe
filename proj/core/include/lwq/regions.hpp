#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lwq/grid.hpp"

namespace lwq {

/// Symmetric 4x4 quadratic form over the corner coordinates
/// (u00, D1+u00, D2+u00, D1+D2+u00).
struct QuadForm4 {
  std::array<std::array<double, 4>, 4> m{};

  double eval(const std::array<double, 4>& v) const;
  double max_abs() const;
  /// Eigenvalues in ascending order (cyclic Jacobi iteration).
  std::array<double, 4> eigenvalues() const;
};

/// The corner contribution of the one-step energy estimate as a quadratic
/// form; cross terms split evenly off-diagonal.
QuadForm4 corner_form(const CflPair& cfl);

/// Same form with the (D1+, D1+D2+) and (D2+, D1+D2+) cross pairings dropped;
/// the u00-D1+D2+ pairing is retained.
QuadForm4 reduced_corner_form(const CflPair& cfl);

/// True iff all four eigenvalues are < -tol_nd with tol_nd = 1e-12 times the
/// matrix max-abs entry; the leading-principal-minor sign pattern is used as
/// an internal cross-check. Throws on non-finite entries.
bool is_negative_definite_4(const QuadForm4& q);

/// Hermitian 2x2 symbol of the whole-line boundary form, parameterized by
/// x = sin^2(xi/2). The (1,2) entry is off_re + i off_im; off_im carries the
/// sin(xi) prefactor, so it vanishes at x = 0 and x = 1.
struct HermSymbol2 {
  double h11 = 0.0, h22 = 0.0;
  double off_re = 0.0, off_im = 0.0;
  double x = 0.0;

  double trace() const { return h11 + h22; }
  /// Real determinant h11 h22 - |off|^2; depends only on x.
  double det() const { return h11 * h22 - (off_re * off_re + off_im * off_im); }
};

/// Evaluates the symbol at x in [0,1] with a consistent sin(xi) value
/// (sin^2(xi) = 4x(1-x)). Throws std::domain_error for x outside [0,1].
HermSymbol2 boundary_symbol(const CflPair& cfl, double x, double sin_xi);

/// True iff trace < 0 and det > tol at every x on a uniform grid of [0,1]
/// including both endpoints. Requires samples >= 64.
bool boundary_negdef_all_xi(const CflPair& cfl, int samples = 256);

/// Whole-line boundary form on a compactly supported pair (u, v), evaluated
/// directly in space. Both inputs are the nonzero window of sequences on the
/// integers; they must have equal length.
double boundary_form_space(const std::vector<double>& u,
                           const std::vector<double>& v, const CflPair& cfl);

/// Same form through the symbol: (1/N) sum_m z(xi_m)^* H(xi_m) z(xi_m) over
/// uniform frequencies, with N chosen large enough that the trigonometric
/// quadrature is exact.
double boundary_form_symbol(const std::vector<double>& u,
                            const std::vector<double>& v, const CflPair& cfl);

enum class SweepKind { corner, reduced, boundary };

/// Classification of the (lambda|a|, mu|b|) unit square. Pixel (i, j) has
/// center ((i+0.5)/resolution, (j+0.5)/resolution); class 0 = outside the
/// Cauchy ball, 1 = inside but not negative definite, 2 = inside and negative
/// definite.
struct RegionMap {
  int resolution = 0;
  SweepKind which = SweepKind::corner;
  std::vector<std::uint8_t> cls;  // index i + j*resolution

  std::uint8_t class_at(int i, int j) const {
    return cls[static_cast<size_t>(j) * resolution + i];
  }
  int count_class(std::uint8_t c) const;
};

RegionMap sweep(int resolution, SweepKind which, int symbol_samples = 256);

}  // namespace lwq
