// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria.

#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "lwq/energy.hpp"
#include "lwq/field.hpp"
#include "lwq/grid.hpp"
#include "lwq/regions.hpp"
#include "lwq/scheme1d.hpp"
#include "lwq/scheme2d.hpp"

using lwq::CflPair;
using lwq::Field2D;

namespace {

Field2D random_field(std::mt19937_64& rng, int nx, int ny) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Field2D u(nx, ny);
  for (int j = 0; j < nx - 3; ++j)
    for (int k = 0; k < ny - 3; ++k) u.at(j, k) = d(rng);
  u.fill_ghosts();
  return u;
}

const std::vector<CflPair> kIdentityPairs = {
    CflPair::from_courant(-0.1, -0.1), CflPair::from_courant(-0.3, -0.2),
    CflPair::from_courant(-0.2, -0.3), CflPair::from_courant(-0.4, -0.4)};

// Criterion 1: the two skew identities, the symmetric identity and the exact
// increment split, each to 1e-12 relative over 100 random fields and the four
// Courant pairs.
bool criterion_identities(double* worst) {
  std::mt19937_64 rng(2024);
  double w = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Field2D u = random_field(rng, 32, 32);
    for (const CflPair& cfl : kIdentityPairs) {
      const auto l1 = lwq::lemma1_verify(u, cfl);
      const auto l2 = lwq::lemma2_verify(u, cfl);
      const auto bd = lwq::breakdown(u, cfl);
      w = std::max(w, std::abs(l1.lhs1 - l1.rhs1) / (1.0 + std::abs(l1.lhs1)));
      w = std::max(w, std::abs(l1.lhs2 - l1.rhs2) / (1.0 + std::abs(l1.lhs2)));
      w = std::max(w, std::abs(l2.lhs - l2.rhs) / (1.0 + std::abs(l2.lhs)));
      const double split = bd.skew1 + bd.skew2 + bd.sym_vw + bd.w_norm_sq;
      w = std::max(w, std::abs(bd.increment - split) /
                          (1.0 + std::abs(bd.increment)));
    }
  }
  *worst = w;
  return w <= 1e-12;
}

// Criterion 2: the |w|^2 bound and the grouped estimate as inequalities with
// slack no worse than -1e-12 relative.
bool criterion_inequalities(double* worst) {
  std::mt19937_64 rng(2024);
  double w = 0.0;  // worst signed violation, positive = broken
  for (int t = 0; t < 100; ++t) {
    const Field2D u = random_field(rng, 32, 32);
    for (const CflPair& cfl : kIdentityPairs) {
      const auto l3 = lwq::lemma3_verify(u, cfl);
      const auto bd = lwq::breakdown(u, cfl);
      w = std::max(w, (l3.w_norm_sq - l3.bound) / (1.0 + std::abs(l3.bound)));
      const double grouped =
          bd.interior_I + bd.boundary_B1 + bd.boundary_B2 + bd.corner_C;
      w = std::max(w, (bd.increment - grouped) / (1.0 + std::abs(grouped)));
    }
  }
  *worst = w;
  return w <= 1e-12;
}

// Criterion 3: the per-step estimate with c = 1/10 on a Gaussian bump near
// the corner, 200 steps on 64x64, for three strictly admissible Courant
// pairs (M = 2, eps = 0.05).
bool criterion_theorem(double* worst) {
  lwq::GridSpec g{64, 64, 1.0, 1.0, 1.0};
  const Field2D u0 = lwq::project_initial_2d(
      [](double x, double y) {
        const double r2 = (x - 4.0) * (x - 4.0) + (y - 4.0) * (y - 4.0);
        return std::exp(-r2 / 4.5);
      },
      g);
  double w = -1.0;
  bool ok = true;
  for (auto [a, b] : {std::pair{-0.05, -0.05}, std::pair{-0.1, -0.07},
                      std::pair{-0.07, -0.1}}) {
    const CflPair cfl = CflPair::from_courant(a, b, 2.0, 0.05);
    const auto rep = lwq::theorem1_check(u0, cfl, 200, 0.1);
    ok = ok && rep.strict_admissible && rep.pass;
    w = std::max(w, rep.max_lhs / rep.tol);
  }
  *worst = w;
  return ok;
}

// Criterion 4: 1D dichotomy for lambda|a| in {0.1, ..., 0.9}: standard
// boundary matrix indefinite, modified one negative definite, modified energy
// non-increasing over 500 steps on 256 cells.
bool criterion_dichotomy() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  lwq::Field1D u0(256);
  for (int j = 0; j < 100; ++j) u0.at(j) = d(rng);
  u0.fill_ghosts();
  for (int i = 1; i <= 9; ++i) {
    const double alpha = -0.1 * i;
    const auto std_form = lwq::boundary_form_1d(u0, alpha, false);
    const auto mod_form = lwq::boundary_form_1d(u0, alpha, true);
    const auto es = std_form.eigenvalues();
    const auto em = mod_form.eigenvalues();
    if (!(es[0] < 0.0 && es[1] > 0.0)) return false;
    if (!(em[0] < 0.0 && em[1] < 0.0)) return false;
    lwq::Field1D u = u0;
    double e = lwq::energy_modified_1d(u);
    for (int n = 0; n < 500; ++n) {
      u = lwq::step_1d(u, alpha);
      const double e_next = lwq::energy_modified_1d(u);
      if (!(e_next <= e + 1e-13 * (1.0 + e))) return false;
      e = e_next;
    }
  }
  return true;
}

// Criterion 5: region maps at resolution 256: corner form bad at
// (0.05, 0.05); reduced good count exceeds corner good count; boundary
// symbol good on at least 99% of in-ball pixels with mu|b| >= 0.02.
bool criterion_regions(char* detail, size_t detail_len) {
  const int res = 256;
  const auto corner = lwq::sweep(res, lwq::SweepKind::corner);
  const auto reduced = lwq::sweep(res, lwq::SweepKind::reduced);
  const auto boundary = lwq::sweep(res, lwq::SweepKind::boundary);
  const int pix005 = static_cast<int>(std::lround(0.05 * res - 0.5));
  const bool small_bad = corner.class_at(pix005, pix005) == 1;
  const int good_red = reduced.count_class(2);
  const int good_cor = corner.count_class(2);
  int inball = 0, good = 0;
  for (int j = 0; j < res; ++j) {
    const double mb = (j + 0.5) / res;
    if (mb < 0.02) continue;
    for (int i = 0; i < res; ++i) {
      if (boundary.class_at(i, j) == 0) continue;
      ++inball;
      if (boundary.class_at(i, j) == 2) ++good;
    }
  }
  const double frac = inball > 0 ? static_cast<double>(good) / inball : 0.0;
  std::snprintf(detail, detail_len,
                "small-courant corner bad: %s, good pixels reduced/corner: "
                "%d/%d, boundary good fraction: %.5f",
                small_bad ? "yes" : "no", good_red, good_cor, frac);
  return small_bad && good_red > good_cor && frac >= 0.99;
}

// Criterion 6: space-domain evaluation of the whole-line boundary form vs
// the symbol quadrature, 20 random pairs, 1e-8 relative.
bool criterion_symbol(double* worst) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  const CflPair cfl = CflPair::from_courant(-0.3, -0.2);
  double w = 0.0;
  for (int t = 0; t < 20; ++t) {
    std::vector<double> u(32), v(32);
    for (int j = 0; j < 32; ++j) {
      u[j] = d(rng);
      v[j] = d(rng);
    }
    const double space = lwq::boundary_form_space(u, v, cfl);
    const double symbol = lwq::boundary_form_symbol(u, v, cfl);
    w = std::max(w, std::abs(space - symbol) / (1.0 + std::abs(space)));
  }
  *worst = w;
  return w <= 1e-8;
}

// Criterion 7: observed convergence order in [1.7, 2.3] on the finest
// refinement pair, for an interior bump and a corner-crossing bump.
double convergence_order(double cx, double cy) {
  const double lambda = 0.2, t_final = 0.25, radius = 0.15;
  auto bump = [&](double x, double y) {
    const double r2 =
        ((x - cx) * (x - cx) + (y - cy) * (y - cy)) / (radius * radius);
    if (r2 >= 1.0) return 0.0;
    const double q = 1.0 - r2;
    return q * q * q * q;
  };
  std::vector<double> errs;
  for (int level = 0; level < 4; ++level) {
    const int n = 32 << level;
    const double dx = 1.0 / n;
    const double dt = lambda * dx;
    const int steps = static_cast<int>(std::lround(t_final / dt));
    lwq::GridSpec g{n, n, dx, dx, dt};
    const CflPair cfl = lwq::CflPair::from_speeds(-1.0, -1.0, g);
    Field2D u = lwq::project_initial_2d(bump, g);
    for (int s = 0; s < steps; ++s)
      u = lwq::step_2d(u, cfl, lwq::CflMode::explore);
    const Field2D exact = lwq::project_initial_2d(
        [&](double x, double y) { return bump(x + t_final, y + t_final); }, g);
    double e2 = 0.0;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double diff = u.at(j, k) - exact.at(j, k);
        e2 += diff * diff * dx * dx;
      }
    errs.push_back(std::sqrt(e2));
  }
  return std::log2(errs[2] / errs[3]);
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int idx, const char* name, bool ok, const char* detail) {
    std::printf("criterion %d (%s): %s%s%s\n", idx, name,
                ok ? "PASS" : "FAIL", detail[0] ? " -- " : "", detail);
    if (!ok) ++failures;
  };
  char buf[256];

  double w1 = 0.0;
  const bool ok1 = criterion_identities(&w1);
  std::snprintf(buf, sizeof buf, "max relative residual %.3e", w1);
  report(1, "energy identities", ok1, buf);

  double w2 = 0.0;
  const bool ok2 = criterion_inequalities(&w2);
  std::snprintf(buf, sizeof buf, "worst relative violation %.3e", w2);
  report(2, "energy inequalities", ok2, buf);

  double w3 = 0.0;
  const bool ok3 = criterion_theorem(&w3);
  std::snprintf(buf, sizeof buf, "max estimate lhs / tol %.3e", w3);
  report(3, "per-step stability estimate", ok3, buf);

  report(4, "1D boundary-form dichotomy", criterion_dichotomy(), "");

  const bool ok5 = criterion_regions(buf, sizeof buf);
  report(5, "stability-region maps", ok5, buf);

  double w6 = 0.0;
  const bool ok6 = criterion_symbol(&w6);
  std::snprintf(buf, sizeof buf, "max relative mismatch %.3e", w6);
  report(6, "boundary symbol vs space evaluation", ok6, buf);

  const double ord_int = convergence_order(0.7, 0.7);
  const double ord_cor = convergence_order(0.25, 0.25);
  const bool ok7 = ord_int >= 1.7 && ord_int <= 2.3 && ord_cor >= 1.7 &&
                   ord_cor <= 2.3;
  std::snprintf(buf, sizeof buf,
                "finest observed order interior %.3f, corner-crossing %.3f",
                ord_int, ord_cor);
  report(7, "second-order convergence", ok7, buf);

  return failures;
}
