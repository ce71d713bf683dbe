#include "lwq/regions.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace lwq {

double QuadForm4::eval(const std::array<double, 4>& v) const {
  double s = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s += v[i] * m[i][j] * v[j];
  return s;
}

double QuadForm4::max_abs() const {
  double s = 0.0;
  for (const auto& row : m)
    for (double x : row) s = std::max(s, std::abs(x));
  return s;
}

std::array<double, 4> QuadForm4::eigenvalues() const {
  // Cyclic Jacobi; adequate for symmetric 4x4.
  std::array<std::array<double, 4>, 4> a = m;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) off += a[i][j] * a[i][j];
    if (off <= 1e-30 * (1.0 + max_abs() * max_abs())) break;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = 0.5 * (a[q][q] - a[p][p]) / a[p][q];
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int r = 0; r < 4; ++r) {
          const double arp = a[r][p], arq = a[r][q];
          a[r][p] = c * arp - s * arq;
          a[r][q] = s * arp + c * arq;
        }
        for (int r = 0; r < 4; ++r) {
          const double apr = a[p][r], aqr = a[q][r];
          a[p][r] = c * apr - s * aqr;
          a[q][r] = s * apr + c * aqr;
        }
      }
  }
  std::array<double, 4> ev{a[0][0], a[1][1], a[2][2], a[3][3]};
  std::sort(ev.begin(), ev.end());
  return ev;
}

QuadForm4 corner_form(const CflPair& cfl) {
  const double A = std::abs(cfl.alpha), B = std::abs(cfl.beta);
  const double a2 = A * A, b2 = B * B, s = a2 + b2;
  QuadForm4 q;
  q.m[0][0] = A * B - 0.5 * (A + B);
  q.m[1][1] = -(0.25 * A * a2 + 0.5 * a2 * B);
  q.m[2][2] = -(0.25 * B * b2 + 0.5 * A * b2);
  q.m[3][3] = -(0.1875 * s + 0.125 * (A + B) * s + 0.0625 * s * s);
  q.m[0][1] = q.m[1][0] = -0.25 * a2;
  q.m[0][2] = q.m[2][0] = -0.25 * b2;
  q.m[1][2] = q.m[2][1] = -0.25 * A * B * (A + B);
  q.m[0][3] = q.m[3][0] = -0.125 * s;
  q.m[1][3] = q.m[3][1] = -0.125 * s;
  q.m[2][3] = q.m[3][2] = -0.125 * s;
  return q;
}

QuadForm4 reduced_corner_form(const CflPair& cfl) {
  QuadForm4 q = corner_form(cfl);
  q.m[1][3] = q.m[3][1] = 0.0;
  q.m[2][3] = q.m[3][2] = 0.0;
  return q;
}

namespace {

// Leading principal minors, by direct expansion.
std::array<double, 4> leading_minors(const QuadForm4& q) {
  const auto& m = q.m;
  const double d1 = m[0][0];
  const double d2 = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  double d3 = 0.0;
  d3 += m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  d3 -= m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]);
  d3 += m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  double d4 = 0.0;
  for (int c = 0; c < 4; ++c) {
    // 3x3 minor of row 0, column c.
    int cols[3], n = 0;
    for (int j = 0; j < 4; ++j)
      if (j != c) cols[n++] = j;
    const double sub = m[1][cols[0]] * (m[2][cols[1]] * m[3][cols[2]] -
                                        m[2][cols[2]] * m[3][cols[1]]) -
                       m[1][cols[1]] * (m[2][cols[0]] * m[3][cols[2]] -
                                        m[2][cols[2]] * m[3][cols[0]]) +
                       m[1][cols[2]] * (m[2][cols[0]] * m[3][cols[1]] -
                                        m[2][cols[1]] * m[3][cols[0]]);
    d4 += (c % 2 == 0 ? 1.0 : -1.0) * m[0][c] * sub;
  }
  return {d1, d2, d3, d4};
}

}  // namespace

bool is_negative_definite_4(const QuadForm4& q) {
  for (const auto& row : q.m)
    for (double x : row)
      if (!std::isfinite(x))
        throw std::invalid_argument("is_negative_definite_4: non-finite entry");
  const double tol = 1e-12 * q.max_abs();
  const auto ev = q.eigenvalues();
  const bool by_eig = ev[3] < -tol;
  const auto d = leading_minors(q);
  // Negative definite iff the minors alternate (-, +, -, +).
  const bool by_minors = d[0] < 0.0 && d[1] > 0.0 && d[2] < 0.0 && d[3] > 0.0;
  return by_eig && by_minors;
}

HermSymbol2 boundary_symbol(const CflPair& cfl, double x, double sin_xi) {
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("boundary_symbol: x must be in [0,1]");
  const double A = std::abs(cfl.alpha), B = std::abs(cfl.beta);
  const double a2 = A * A, b2 = B * B, s = a2 + b2;
  HermSymbol2 h;
  h.x = x;
  h.h11 = -B * (1.0 + 2.0 * a2 * x) - 2.0 * a2 * (1.0 - B) * (1.0 - B) * x * x;
  h.h22 = -0.5 * B * b2 - 0.5 * (1.0 + B - b2) * s * x - 2.0 * a2 * b2 * x * x;
  h.off_re = -0.5 * b2 - 0.5 * s * x - a2 * s * x * x;
  h.off_im = sin_xi * (0.5 * A * b2 + 0.5 * A * s * x - 2.0 * A * a2 * B * x);
  return h;
}

bool boundary_negdef_all_xi(const CflPair& cfl, int samples) {
  if (samples < 64)
    throw std::invalid_argument("boundary_negdef_all_xi: need samples >= 64");
  for (int i = 0; i < samples; ++i) {
    const double x = static_cast<double>(i) / (samples - 1);
    const double sin_xi = std::sqrt(std::max(0.0, 4.0 * x * (1.0 - x)));
    const HermSymbol2 h = boundary_symbol(cfl, x, sin_xi);
    const double scale = 1.0 + h.h11 * h.h11 + h.h22 * h.h22;
    if (!(h.trace() < 0.0) || !(h.det() > 1e-14 * scale)) return false;
  }
  return true;
}

double boundary_form_space(const std::vector<double>& u,
                           const std::vector<double>& v, const CflPair& cfl) {
  if (u.size() != v.size())
    throw std::invalid_argument("boundary_form_space: length mismatch");
  const double A = std::abs(cfl.alpha), B = std::abs(cfl.beta);
  const double a2 = A * A, b2 = B * B, s = a2 + b2;
  const int L = static_cast<int>(u.size());
  // Embed on the integers with zero padding so every stencil closes.
  const int pad = 4, n = L + 2 * pad;
  std::vector<double> U(n, 0.0), V(n, 0.0);
  for (int j = 0; j < L; ++j) {
    U[j + pad] = u[j];
    V[j + pad] = v[j];
  }
  double r = 0.0;
  for (int j = 1; j + 1 < n; ++j) {
    const double uj = U[j], vj = V[j];
    const double dpu = U[j + 1] - U[j], dpv = V[j + 1] - V[j];
    const double d0u = 0.5 * (U[j + 1] - U[j - 1]);
    const double d0v = 0.5 * (V[j + 1] - V[j - 1]);
    const double lu = U[j + 1] - 2.0 * U[j] + U[j - 1];
    const double lv = V[j + 1] - 2.0 * V[j] + V[j - 1];
    r += -B * uj * uj - 0.5 * B * b2 * vj * vj - 0.5 * a2 * B * dpu * dpu -
         0.125 * a2 * (1.0 - B) * (1.0 - B) * lu * lu - b2 * uj * vj -
         A * b2 * d0u * vj - 0.125 * a2 * b2 * lv * lv +
         0.25 * A * s * d0u * lv -
         0.125 * (1.0 + B - b2) * s * dpv * dpv - 0.25 * s * dpu * dpv -
         0.125 * a2 * s * lu * lv + A * a2 * B * lu * d0v;
  }
  return r;
}

double boundary_form_symbol(const std::vector<double>& u,
                            const std::vector<double>& v, const CflPair& cfl) {
  if (u.size() != v.size())
    throw std::invalid_argument("boundary_form_symbol: length mismatch");
  const int L = static_cast<int>(u.size());
  const int N = 4 * (L + 8);  // exact quadrature for the trig polynomials here
  const double two_pi = 2.0 * std::acos(-1.0);
  double r = 0.0;
  for (int m = 0; m < N; ++m) {
    const double xi = two_pi * m / N;
    std::complex<double> uh(0.0, 0.0), vh(0.0, 0.0);
    for (int j = 0; j < L; ++j) {
      const std::complex<double> e(std::cos(j * xi), -std::sin(j * xi));
      uh += u[j] * e;
      vh += v[j] * e;
    }
    const double sh = std::sin(0.5 * xi);
    const HermSymbol2 h = boundary_symbol(cfl, sh * sh, std::sin(xi));
    const std::complex<double> off(h.off_re, h.off_im);
    r += h.h11 * std::norm(uh) + h.h22 * std::norm(vh) +
         2.0 * std::real(std::conj(uh) * off * vh);
  }
  return r / N;
}

int RegionMap::count_class(std::uint8_t c) const {
  int n = 0;
  for (std::uint8_t x : cls)
    if (x == c) ++n;
  return n;
}

RegionMap sweep(int resolution, SweepKind which, int symbol_samples) {
  if (resolution < 16) throw std::invalid_argument("sweep: resolution must be >= 16");
  RegionMap map;
  map.resolution = resolution;
  map.which = which;
  map.cls.assign(static_cast<size_t>(resolution) * resolution, 0);
  for (int j = 0; j < resolution; ++j)
    for (int i = 0; i < resolution; ++i) {
      const double la = (i + 0.5) / resolution;
      const double mb = (j + 0.5) / resolution;
      std::uint8_t c = 0;
      if (la * la + mb * mb <= 0.5) {
        const CflPair cfl = CflPair::from_courant(-la, -mb);
        bool good = false;
        switch (which) {
          case SweepKind::corner:
            good = is_negative_definite_4(corner_form(cfl));
            break;
          case SweepKind::reduced:
            good = is_negative_definite_4(reduced_corner_form(cfl));
            break;
          case SweepKind::boundary:
            good = boundary_negdef_all_xi(cfl, symbol_samples);
            break;
        }
        c = good ? 2 : 1;
      }
      map.cls[static_cast<size_t>(j) * resolution + i] = c;
    }
  return map;
}

}  // namespace lwq
