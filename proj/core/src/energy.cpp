#include "lwq/energy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lwq/stencils.hpp"

namespace lwq {

namespace {

// Norm weight by index class: strict interior 1, edges 1/2, corner 1/4.
inline double weight(int j, int k) {
  if (j > 0 && k > 0) return 1.0;
  if (j == 0 && k == 0) return 0.25;
  return 0.5;
}

void require_clear(const Field2D& u, const char* who) {
  if (!support_clear_of_far_edges(u))
    throw std::invalid_argument(std::string(who) +
                                ": support touches a far edge");
}

// The three strict-interior dissipation sums (j,k >= 1) that the interior
// group is built from: |Lap1 u|^2, |Lap2 u|^2 and the four mixed
// D1+-D2+- norms combined.
struct InteriorSums {
  double lap1_sq = 0.0;
  double lap2_sq = 0.0;
  double mixed = 0.0;

  // a^2/4 |Lap1 u|^2 + b^2/4 |Lap2 u|^2 + (a^2+b^2)/16 * mixed
  double brace(double a2, double b2) const {
    return 0.25 * a2 * lap1_sq + 0.25 * b2 * lap2_sq +
           0.0625 * (a2 + b2) * mixed;
  }
};

InteriorSums interior_sums(const Field2D& u) {
  InteriorSums s;
  for (int j = 1; j < u.nx(); ++j)
    for (int k = 1; k < u.ny(); ++k) {
      const double l1 = ops::lap1(u, j, k);
      const double l2 = ops::lap2(u, j, k);
      const double mm = ops::d1m_d2m(u, j, k);
      const double mp = ops::d1m_d2p(u, j, k);
      const double pm = ops::d1p_d2m(u, j, k);
      const double pp = ops::d1p_d2p(u, j, k);
      s.lap1_sq += l1 * l1;
      s.lap2_sq += l2 * l2;
      s.mixed += mm * mm + mp * mp + pm * pm + pp * pp;
    }
  return s;
}

// sum over the edge {k=0, j>=1}
template <class F>
double edge1_sum(const Field2D& u, F f) {
  double s = 0.0;
  for (int j = 1; j < u.nx(); ++j) s += f(u, j);
  return s;
}

// sum over the edge {j=0, k>=1}
template <class F>
double edge2_sum(const Field2D& u, F f) {
  double s = 0.0;
  for (int k = 1; k < u.ny(); ++k) s += f(u, k);
  return s;
}

// Closed-form terms of the second skew piece, in print order. Index layout:
// 0..11 edge sums, 12..17 corner point terms.
std::vector<double> skew2_terms(const Field2D& u, const CflPair& cfl) {
  const double A = std::abs(cfl.alpha), B = std::abs(cfl.beta);
  const double a2 = A * A, b2 = B * B, s = a2 + b2;
  using ops::d10;
  using ops::d1p;
  using ops::d1p_d2p;
  using ops::d1p_lap2;
  using ops::d20;
  using ops::d2p;
  using ops::d2p_lap1;
  using ops::lap1;
  using ops::lap2;
  std::vector<double> t(18, 0.0);
  t[0] = -0.5 * A * a2 *
         edge2_sum(u, [](const Field2D& u, int k) { return d1p(u, 0, k) * d1p(u, 0, k); });
  t[1] = -0.5 * B * b2 *
         edge1_sum(u, [](const Field2D& u, int j) { return d2p(u, j, 0) * d2p(u, j, 0); });
  t[2] = -0.5 * A * b2 *
         edge2_sum(u, [](const Field2D& u, int k) { return d2p(u, 0, k) * d2p(u, 0, k); });
  t[3] = -0.5 * a2 * B *
         edge1_sum(u, [](const Field2D& u, int j) { return d1p(u, j, 0) * d1p(u, j, 0); });
  t[4] = 0.25 * A * b2 *
         edge2_sum(u, [](const Field2D& u, int k) { return lap2(u, 0, k) * lap2(u, 0, k); });
  t[5] = 0.25 * a2 * B *
         edge1_sum(u, [](const Field2D& u, int j) { return lap1(u, j, 0) * lap1(u, j, 0); });
  t[6] = -a2 * B *
         edge2_sum(u, [](const Field2D& u, int k) { return d20(u, 0, k) * d1p(u, 0, k); });
  t[7] = -A * b2 *
         edge1_sum(u, [](const Field2D& u, int j) { return d10(u, j, 0) * d2p(u, j, 0); });
  t[8] = -0.125 * A * s *
         edge2_sum(u, [](const Field2D& u, int k) { return d1p_d2p(u, 0, k) * d1p_d2p(u, 0, k); });
  t[9] = -0.125 * B * s *
         edge1_sum(u, [](const Field2D& u, int j) { return d1p_d2p(u, j, 0) * d1p_d2p(u, j, 0); });
  t[10] = 0.25 * B * s *
          edge2_sum(u, [](const Field2D& u, int k) { return d20(u, 0, k) * d1p_lap2(u, 0, k); });
  t[11] = 0.25 * A * s *
          edge1_sum(u, [](const Field2D& u, int j) { return d10(u, j, 0) * d2p_lap1(u, j, 0); });
  const double p = d1p(u, 0, 0), q = d2p(u, 0, 0), r = d1p_d2p(u, 0, 0);
  t[12] = -0.25 * A * a2 * p * p;
  t[13] = -0.25 * B * b2 * q * q;
  t[14] = -0.125 * (A + B) * s * r * r;
  t[15] = -0.5 * a2 * B * p * p;
  t[16] = -0.5 * A * b2 * q * q;
  t[17] = -0.5 * A * B * (A + B) * p * q;
  return t;
}

// Closed-form terms of the first symmetric piece, in print order. Index
// layout: 0..2 strict interior, 3..10 edge sums, 11..15 corner point terms.
std::vector<double> sym_vw_terms(const Field2D& u, const CflPair& cfl) {
  const double A = std::abs(cfl.alpha), B = std::abs(cfl.beta);
  const double a2 = A * A, b2 = B * B, s = a2 + b2;
  using ops::d1p;
  using ops::d1p_d2p;
  using ops::d2p;
  using ops::lap1;
  using ops::lap2;
  const InteriorSums in = interior_sums(u);
  std::vector<double> t(16, 0.0);
  t[0] = -0.25 * a2 * in.lap1_sq;
  t[1] = -0.25 * b2 * in.lap2_sq;
  t[2] = -0.0625 * s * in.mixed;
  t[3] = -0.125 * a2 *
         edge1_sum(u, [](const Field2D& u, int j) { return lap1(u, j, 0) * lap1(u, j, 0); });
  t[4] = -0.125 * b2 *
         edge2_sum(u, [](const Field2D& u, int k) { return lap2(u, 0, k) * lap2(u, 0, k); });
  t[5] = -a2 *
         edge2_sum(u, [](const Field2D& u, int k) { return u.at(0, k) * d1p(u, 0, k); });
  t[6] = -b2 *
         edge1_sum(u, [](const Field2D& u, int j) { return u.at(j, 0) * d2p(u, j, 0); });
  t[7] = -0.125 * s *
         edge1_sum(u, [](const Field2D& u, int j) { return d1p_d2p(u, j, 0) * d1p_d2p(u, j, 0); });
  t[8] = -0.125 * s *
         edge2_sum(u, [](const Field2D& u, int k) { return d1p_d2p(u, 0, k) * d1p_d2p(u, 0, k); });
  t[9] = -0.25 * s *
         edge1_sum(u, [](const Field2D& u, int j) { return d1p(u, j, 0) * d1p_d2p(u, j, 0); });
  t[10] = -0.25 * s *
          edge2_sum(u, [](const Field2D& u, int k) { return d2p(u, 0, k) * d1p_d2p(u, 0, k); });
  const double u00 = u.at(0, 0);
  const double p = d1p(u, 0, 0), q = d2p(u, 0, 0), r = d1p_d2p(u, 0, 0);
  t[11] = A * B * u00 * u00;
  t[12] = -0.5 * a2 * u00 * p;
  t[13] = -0.5 * b2 * u00 * q;
  t[14] = -0.25 * s * (u00 + p + q) * r;
  t[15] = -0.1875 * s * r * r;
  return t;
}

// Terms of the |w|^2 upper bound, in print order. Index layout: 0 interior
// brace with its prefactor, 1..8 edge sums, 9 corner point term.
std::vector<double> w_bound_terms(const Field2D& u, const CflPair& cfl) {
  const double A = std::abs(cfl.alpha), B = std::abs(cfl.beta);
  const double a2 = A * A, b2 = B * B, s = a2 + b2;
  using ops::d1p_d20;
  using ops::d1p_d2p;
  using ops::d1p_lap2;
  using ops::d2p_d10;
  using ops::d2p_lap1;
  using ops::lap1;
  using ops::lap2;
  const InteriorSums in = interior_sums(u);
  std::vector<double> t(10, 0.0);
  t[0] = 2.0 * s * in.brace(a2, b2);
  t[1] = -0.125 * a2 * b2 *
         edge1_sum(u, [](const Field2D& u, int j) { return lap1(u, j, 0) * lap1(u, j, 0); });
  t[2] = -0.125 * a2 * b2 *
         edge2_sum(u, [](const Field2D& u, int k) { return lap2(u, 0, k) * lap2(u, 0, k); });
  t[3] = -0.125 * a2 * b2 *
         edge1_sum(u, [](const Field2D& u, int j) { return d2p_lap1(u, j, 0) * d2p_lap1(u, j, 0); });
  t[4] = -0.125 * a2 * b2 *
         edge2_sum(u, [](const Field2D& u, int k) { return d1p_lap2(u, 0, k) * d1p_lap2(u, 0, k); });
  t[5] = -0.125 * a2 * s *
         edge1_sum(u, [](const Field2D& u, int j) { return lap1(u, j, 0) * d2p_lap1(u, j, 0); });
  t[6] = -0.125 * b2 * s *
         edge2_sum(u, [](const Field2D& u, int k) { return lap2(u, 0, k) * d1p_lap2(u, 0, k); });
  t[7] = 0.125 * s *
         (b2 * edge1_sum(u, [](const Field2D& u, int j) { return d1p_d2p(u, j, 0) * d1p_d2p(u, j, 0); }) +
          a2 * edge2_sum(u, [](const Field2D& u, int k) { return d1p_d2p(u, 0, k) * d1p_d2p(u, 0, k); }));
  t[8] = A * a2 * B *
             edge1_sum(u, [](const Field2D& u, int j) { return lap1(u, j, 0) * d2p_d10(u, j, 0); }) +
         A * B * b2 *
             edge2_sum(u, [](const Field2D& u, int k) { return lap2(u, 0, k) * d1p_d20(u, 0, k); });
  const double r = d1p_d2p(u, 0, 0);
  t[9] = -0.0625 * s * s * r * r;
  return t;
}

double sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

}  // namespace

double norm_sq(const Field2D& u) {
  double s = 0.0;
  for (int j = 0; j < u.nx(); ++j)
    for (int k = 0; k < u.ny(); ++k)
      s += weight(j, k) * u.at(j, k) * u.at(j, k);
  return s;
}

double norm_sq(const Interior2D& a) {
  double s = 0.0;
  for (int j = 0; j < a.nx(); ++j)
    for (int k = 0; k < a.ny(); ++k) s += weight(j, k) * a.at(j, k) * a.at(j, k);
  return s;
}

double inner(const Interior2D& a, const Interior2D& b) {
  if (a.nx() != b.nx() || a.ny() != b.ny())
    throw std::invalid_argument("inner: shape mismatch");
  double s = 0.0;
  for (int j = 0; j < a.nx(); ++j)
    for (int k = 0; k < a.ny(); ++k) s += weight(j, k) * a.at(j, k) * b.at(j, k);
  return s;
}

Lemma1Report lemma1_verify(const Field2D& u, const CflPair& cfl) {
  require_clear(u, "lemma1_verify");
  const double A = std::abs(cfl.alpha), B = std::abs(cfl.beta);
  const Interior2D ui = Interior2D::from_field(u);
  const Interior2D v = compute_v(u, cfl);
  const Interior2D w = compute_w(u, cfl);
  Lemma1Report r;
  r.lhs1 = 2.0 * inner(ui, v);
  r.rhs1 =
      -A * edge2_sum(u, [](const Field2D& u, int k) { return u.at(0, k) * u.at(0, k); }) -
      B * edge1_sum(u, [](const Field2D& u, int j) { return u.at(j, 0) * u.at(j, 0); }) -
      0.5 * (A + B) * u.at(0, 0) * u.at(0, 0);
  r.lhs2 = -2.0 * inner(v, w);
  r.terms2 = skew2_terms(u, cfl);
  r.rhs2 = sum(r.terms2);
  return r;
}

Lemma2Report lemma2_verify(const Field2D& u, const CflPair& cfl) {
  require_clear(u, "lemma2_verify");
  const Interior2D ui = Interior2D::from_field(u);
  const Interior2D v = compute_v(u, cfl);
  const Interior2D w = compute_w(u, cfl);
  Lemma2Report r;
  r.lhs = norm_sq(v) - 2.0 * inner(ui, w);
  r.terms = sym_vw_terms(u, cfl);
  r.rhs = sum(r.terms);
  return r;
}

Lemma3Report lemma3_verify(const Field2D& u, const CflPair& cfl) {
  require_clear(u, "lemma3_verify");
  if (!(cfl.alpha < 0.0 && cfl.beta < 0.0))
    throw std::invalid_argument("lemma3_verify: alpha and beta must be negative");
  Lemma3Report r;
  r.w_norm_sq = norm_sq(compute_w(u, cfl));
  r.terms = w_bound_terms(u, cfl);
  r.bound = sum(r.terms);
  return r;
}

EnergyBreakdown breakdown(const Field2D& u, const CflPair& cfl,
                          double support_rel_tol) {
  if (!support_clear_of_far_edges(u, 3, support_rel_tol))
    throw std::invalid_argument("breakdown: support touches a far edge");
  const double A = std::abs(cfl.alpha), B = std::abs(cfl.beta);
  const double a2 = A * A, b2 = B * B, s = a2 + b2;
  using ops::d10;
  using ops::d1p;
  using ops::d1p_d20;
  using ops::d1p_d2p;
  using ops::d1p_lap2;
  using ops::d20;
  using ops::d2p;
  using ops::d2p_d10;
  using ops::d2p_lap1;
  using ops::lap1;
  using ops::lap2;

  EnergyBreakdown bd;
  const Interior2D ui = Interior2D::from_field(u);
  const Interior2D v = compute_v(u, cfl);
  const Interior2D w = compute_w(u, cfl);
  bd.skew1 = 2.0 * inner(ui, v);
  bd.skew2 = sum(skew2_terms(u, cfl));
  bd.sym_vw = sum(sym_vw_terms(u, cfl));
  bd.w_norm_sq = norm_sq(w);
  bd.w_bound = sum(w_bound_terms(u, cfl));
  bd.increment = norm_sq(step_2d(u, cfl, CflMode::explore)) - norm_sq(u);

  const InteriorSums in = interior_sums(u);
  bd.interior_I = (-1.0 + 2.0 * s) * in.brace(a2, b2);

  const double omB = 1.0 - B, omA = 1.0 - A;
  bd.boundary_B1 =
      -B * edge1_sum(u, [](const Field2D& u, int j) { return u.at(j, 0) * u.at(j, 0); }) -
      0.5 * B * b2 * edge1_sum(u, [](const Field2D& u, int j) { return d2p(u, j, 0) * d2p(u, j, 0); }) -
      0.5 * a2 * B * edge1_sum(u, [](const Field2D& u, int j) { return d1p(u, j, 0) * d1p(u, j, 0); }) -
      0.125 * a2 * omB * omB * edge1_sum(u, [](const Field2D& u, int j) { return lap1(u, j, 0) * lap1(u, j, 0); }) -
      b2 * edge1_sum(u, [](const Field2D& u, int j) { return u.at(j, 0) * d2p(u, j, 0); }) -
      A * b2 * edge1_sum(u, [](const Field2D& u, int j) { return d10(u, j, 0) * d2p(u, j, 0); }) -
      0.125 * a2 * b2 * edge1_sum(u, [](const Field2D& u, int j) { return d2p_lap1(u, j, 0) * d2p_lap1(u, j, 0); }) +
      0.25 * A * s * edge1_sum(u, [](const Field2D& u, int j) { return d10(u, j, 0) * d2p_lap1(u, j, 0); }) -
      0.125 * (1.0 + B - b2) * s * edge1_sum(u, [](const Field2D& u, int j) { return d1p_d2p(u, j, 0) * d1p_d2p(u, j, 0); }) -
      0.25 * s * edge1_sum(u, [](const Field2D& u, int j) { return d1p(u, j, 0) * d1p_d2p(u, j, 0); }) -
      0.125 * a2 * s * edge1_sum(u, [](const Field2D& u, int j) { return lap1(u, j, 0) * d2p_lap1(u, j, 0); }) +
      A * a2 * B * edge1_sum(u, [](const Field2D& u, int j) { return lap1(u, j, 0) * d2p_d10(u, j, 0); });

  bd.boundary_B2 =
      -A * edge2_sum(u, [](const Field2D& u, int k) { return u.at(0, k) * u.at(0, k); }) -
      0.5 * A * a2 * edge2_sum(u, [](const Field2D& u, int k) { return d1p(u, 0, k) * d1p(u, 0, k); }) -
      0.5 * A * b2 * edge2_sum(u, [](const Field2D& u, int k) { return d2p(u, 0, k) * d2p(u, 0, k); }) -
      0.125 * b2 * omA * omA * edge2_sum(u, [](const Field2D& u, int k) { return lap2(u, 0, k) * lap2(u, 0, k); }) -
      a2 * edge2_sum(u, [](const Field2D& u, int k) { return u.at(0, k) * d1p(u, 0, k); }) -
      a2 * B * edge2_sum(u, [](const Field2D& u, int k) { return d20(u, 0, k) * d1p(u, 0, k); }) -
      0.125 * a2 * b2 * edge2_sum(u, [](const Field2D& u, int k) { return d1p_lap2(u, 0, k) * d1p_lap2(u, 0, k); }) +
      0.25 * B * s * edge2_sum(u, [](const Field2D& u, int k) { return d20(u, 0, k) * d1p_lap2(u, 0, k); }) -
      0.125 * (1.0 + A - a2) * s * edge2_sum(u, [](const Field2D& u, int k) { return d1p_d2p(u, 0, k) * d1p_d2p(u, 0, k); }) -
      0.25 * s * edge2_sum(u, [](const Field2D& u, int k) { return d2p(u, 0, k) * d1p_d2p(u, 0, k); }) -
      0.125 * b2 * s * edge2_sum(u, [](const Field2D& u, int k) { return lap2(u, 0, k) * d1p_lap2(u, 0, k); }) +
      A * B * b2 * edge2_sum(u, [](const Field2D& u, int k) { return lap2(u, 0, k) * d1p_d20(u, 0, k); });

  const double u00 = u.at(0, 0);
  const double p = d1p(u, 0, 0), q = d2p(u, 0, 0), rr = d1p_d2p(u, 0, 0);
  bd.corner_C = (A * B - 0.5 * (A + B)) * u00 * u00 -
                (0.25 * A * a2 + 0.5 * a2 * B) * p * p -
                (0.25 * B * b2 + 0.5 * A * b2) * q * q - 0.5 * a2 * u00 * p -
                0.5 * b2 * u00 * q - 0.5 * A * B * (A + B) * p * q -
                0.25 * s * (u00 + p + q) * rr -
                (0.1875 * s + 0.125 * (A + B) * s + 0.0625 * s * s) * rr * rr;
  return bd;
}

double theorem_step_lhs(const Field2D& u, const Field2D& next,
                        const CflPair& cfl, double c) {
  const double A = std::abs(cfl.alpha), B = std::abs(cfl.beta);
  const InteriorSums in = interior_sums(u);
  double edge1 = u.at(0, 0) * u.at(0, 0), edge2 = edge1;
  for (int j = 1; j < u.nx(); ++j) edge1 += u.at(j, 0) * u.at(j, 0);
  for (int k = 1; k < u.ny(); ++k) edge2 += u.at(0, k) * u.at(0, k);
  return norm_sq(next) - norm_sq(u) + c * A * A * in.lap1_sq +
         c * B * B * in.lap2_sq + c * A * edge2 + c * B * edge1;
}

TheoremReport theorem1_check(const Field2D& u0, const CflPair& cfl, int steps,
                             double c, CflMode mode) {
  admit_cfl(cfl, mode);
  TheoremReport rep;
  try {
    admit_cfl(cfl, CflMode::strict);
    rep.strict_admissible = true;
  } catch (const std::invalid_argument&) {
    rep.strict_admissible = false;
  }
  rep.initial_norm_sq = norm_sq(u0);
  rep.tol = 1e-12 * (1.0 + rep.initial_norm_sq);
  rep.per_step.reserve(static_cast<size_t>(steps));

  Field2D u = u0;
  for (int n = 0; n < steps; ++n) {
    const Field2D next = step_2d(u, cfl, mode);
    const double lhs = theorem_step_lhs(u, next, cfl, c);
    rep.per_step.push_back(lhs);
    if (n == 0 || lhs > rep.max_lhs) rep.max_lhs = lhs;
    u = next;
  }
  if (steps == 0) rep.max_lhs = 0.0;
  rep.pass = rep.max_lhs <= rep.tol;
  return rep;
}

}  // namespace lwq
