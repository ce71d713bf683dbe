// Command-line driver: simulations with energy reports, identity and
// inequality audits on random fields, stability-region sweeps, and a grid
// refinement study.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lwq/energy.hpp"
#include "lwq/field.hpp"
#include "lwq/grid.hpp"
#include "lwq/regions.hpp"
#include "lwq/scheme2d.hpp"

namespace {

constexpr int kExitAuditFail = 1;
constexpr int kExitCflRejected = 2;
constexpr int kExitUsage = 64;
constexpr int kExitSupportExits = 65;
constexpr int kExitCantWrite = 73;

std::string fmt(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

// ---------------------------------------------------------------- simulate

struct SimulateOpts {
  int nx = 64, ny = 64, steps = 100;
  double dx = 1.0, dy = 1.0, dt = 1.0;
  double a = -0.1, b = -0.1;
  double c = 0.1;
  double bound_m = 2.0, radius_eps = 0.25;
  std::string ic = "gaussian";
  std::string ic_file;
  std::string mode = "strict";
  std::string out;
  double cx = -1.0, cy = -1.0, sigma = -1.0;
  double support_tol = 1e-9;
};

int run_simulate(const SimulateOpts& o) {
  lwq::GridSpec g{o.nx, o.ny, o.dx, o.dy, o.dt};
  try {
    g.validate_2d();
  } catch (const std::exception& e) {
    std::cerr << "simulate: " << e.what() << "\n";
    return kExitUsage;
  }
  const lwq::CflPair cfl =
      lwq::CflPair::from_speeds(o.a, o.b, g, o.bound_m, o.radius_eps);
  const lwq::CflMode mode =
      o.mode == "strict" ? lwq::CflMode::strict : lwq::CflMode::explore;
  try {
    lwq::admit_cfl(cfl, mode);
  } catch (const std::exception& e) {
    std::cerr << "simulate: rejected: " << e.what() << "\n";
    return kExitCflRejected;
  }

  const double lx = o.nx * o.dx, ly = o.ny * o.dy;
  const double cx = o.cx >= 0.0 ? o.cx : 0.25 * lx;
  const double cy = o.cy >= 0.0 ? o.cy : 0.25 * ly;
  const double sigma = o.sigma > 0.0 ? o.sigma : 0.1 * std::min(lx, ly);

  lwq::Field2D u(o.nx, o.ny);
  if (o.ic == "gaussian") {
    u = lwq::project_initial_2d(
        [&](double x, double y) {
          const double r2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
          return std::exp(-r2 / (2.0 * sigma * sigma));
        },
        g);
  } else if (o.ic == "spike") {
    const int sj = std::min(o.nx - 1, static_cast<int>(cx / o.dx));
    const int sk = std::min(o.ny - 1, static_cast<int>(cy / o.dy));
    u.at(sj, sk) = 1.0;
    u.fill_ghosts();
  } else if (o.ic == "file") {
    std::ifstream in(o.ic_file);
    if (!in) {
      std::cerr << "simulate: cannot read " << o.ic_file << "\n";
      return kExitUsage;
    }
    for (int j = 0; j < o.nx; ++j)
      for (int k = 0; k < o.ny; ++k)
        if (!(in >> u.at(j, k))) {
          std::cerr << "simulate: " << o.ic_file << ": expected " << o.nx * o.ny
                    << " whitespace-separated values\n";
          return kExitUsage;
        }
    u.fill_ghosts();
  } else {
    std::cerr << "simulate: unknown --ic " << o.ic << "\n";
    return kExitUsage;
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      std::cerr << "simulate: cannot write " << o.out << "\n";
      return kExitCantWrite;
    }
    os = &file;
  }

  *os << "step,norm_sq,increment,I,B1,B2,C,theorem_lhs\n";
  for (int n = 0; n < o.steps; ++n) {
    lwq::EnergyBreakdown bd;
    try {
      bd = lwq::breakdown(u, cfl, o.support_tol);
    } catch (const std::exception& e) {
      std::cerr << "simulate: step " << n << ": " << e.what() << "\n";
      return kExitAuditFail;
    }
    const lwq::Field2D next = lwq::step_2d(u, cfl, mode);
    const double lhs = lwq::theorem_step_lhs(u, next, cfl, o.c);
    *os << n << ',' << fmt(lwq::norm_sq(u)) << ',' << fmt(bd.increment) << ','
        << fmt(bd.interior_I) << ',' << fmt(bd.boundary_B1) << ','
        << fmt(bd.boundary_B2) << ',' << fmt(bd.corner_C) << ',' << fmt(lhs)
        << '\n';
    u = next;
  }
  return 0;
}

// ------------------------------------------------------------------- audit

struct AuditOpts {
  int trials = 100;
  std::uint64_t seed = 1;
  double alpha = -0.3, beta = -0.2;
  bool sweep_cfl = false;
  int nx = 32, ny = 32;
  bool corrupt_ghost = false;
};

lwq::Field2D random_field(std::mt19937_64& rng, int nx, int ny) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  lwq::Field2D u(nx, ny);
  for (int j = 0; j < nx - 3; ++j)
    for (int k = 0; k < ny - 3; ++k) u.at(j, k) = dist(rng);
  u.fill_ghosts();
  return u;
}

int run_audit(const AuditOpts& o) {
  std::cout << "audit: seed " << o.seed << ", trials " << o.trials << "\n";
  std::vector<lwq::CflPair> pairs;
  if (o.sweep_cfl) {
    pairs = {lwq::CflPair::from_courant(-0.1, -0.1),
             lwq::CflPair::from_courant(-0.3, -0.2),
             lwq::CflPair::from_courant(-0.2, -0.3),
             lwq::CflPair::from_courant(-0.4, -0.4)};
  } else {
    pairs = {lwq::CflPair::from_courant(o.alpha, o.beta)};
  }
  std::mt19937_64 rng(o.seed);
  double r_skew1 = 0.0, r_skew2 = 0.0, r_sym = 0.0, r_split = 0.0;
  double v_lemma3 = 0.0, v_grouped = 0.0;  // worst inequality violations
  for (int t = 0; t < o.trials; ++t) {
    lwq::Field2D u = random_field(rng, o.nx, o.ny);
    if (o.corrupt_ghost) u.at(-1, o.ny / 2) += 0.5;
    for (const lwq::CflPair& cfl : pairs) {
      const auto l1 = lwq::lemma1_verify(u, cfl);
      const auto l2 = lwq::lemma2_verify(u, cfl);
      const auto l3 = lwq::lemma3_verify(u, cfl);
      const auto bd = lwq::breakdown(u, cfl);
      r_skew1 = std::max(r_skew1,
                         std::abs(l1.lhs1 - l1.rhs1) / (1.0 + std::abs(l1.lhs1)));
      r_skew2 = std::max(r_skew2,
                         std::abs(l1.lhs2 - l1.rhs2) / (1.0 + std::abs(l1.lhs2)));
      r_sym = std::max(r_sym,
                       std::abs(l2.lhs - l2.rhs) / (1.0 + std::abs(l2.lhs)));
      const double split =
          bd.increment - (bd.skew1 + bd.skew2 + bd.sym_vw + bd.w_norm_sq);
      r_split = std::max(r_split, std::abs(split) / (1.0 + std::abs(bd.increment)));
      v_lemma3 = std::max(
          v_lemma3, (l3.w_norm_sq - l3.bound) / (1.0 + std::abs(l3.bound)));
      const double grouped =
          bd.interior_I + bd.boundary_B1 + bd.boundary_B2 + bd.corner_C;
      v_grouped = std::max(v_grouped, (bd.increment - grouped) /
                                          (1.0 + std::abs(grouped)));
    }
  }
  const double tol = 1e-12;
  bool ok = true;
  auto line = [&](const char* name, double val, bool pass) {
    std::cout << name << ": " << fmt(val) << (pass ? "  PASS" : "  FAIL") << "\n";
    ok = ok && pass;
  };
  line("max rel residual, first skew identity", r_skew1, r_skew1 <= tol);
  line("max rel residual, second skew identity", r_skew2, r_skew2 <= tol);
  line("max rel residual, symmetric identity", r_sym, r_sym <= tol);
  line("max rel residual, increment split", r_split, r_split <= tol);
  line("max rel violation, |w|^2 bound", v_lemma3, v_lemma3 <= tol);
  line("max rel violation, grouped estimate", v_grouped, v_grouped <= tol);
  return ok ? 0 : kExitAuditFail;
}

// ------------------------------------------------------------------- sweep

struct SweepOpts {
  std::string which = "corner";
  int res = 256;
  int samples = 256;
  std::string out_csv, out_pgm;
};

int run_sweep(const SweepOpts& o) {
  lwq::SweepKind kind;
  if (o.which == "corner")
    kind = lwq::SweepKind::corner;
  else if (o.which == "reduced")
    kind = lwq::SweepKind::reduced;
  else if (o.which == "boundary")
    kind = lwq::SweepKind::boundary;
  else {
    std::cerr << "sweep: unknown --which " << o.which << "\n";
    return kExitUsage;
  }
  const lwq::RegionMap map = lwq::sweep(o.res, kind, o.samples);
  if (!o.out_csv.empty()) {
    std::ofstream f(o.out_csv);
    if (!f) {
      std::cerr << "sweep: cannot write " << o.out_csv << "\n";
      return kExitCantWrite;
    }
    f << "la,mb,class\n";
    for (int j = 0; j < o.res; ++j)
      for (int i = 0; i < o.res; ++i)
        f << fmt((i + 0.5) / o.res) << ',' << fmt((j + 0.5) / o.res) << ','
          << static_cast<int>(map.class_at(i, j)) << '\n';
  }
  if (!o.out_pgm.empty()) {
    std::ofstream f(o.out_pgm, std::ios::binary);
    if (!f) {
      std::cerr << "sweep: cannot write " << o.out_pgm << "\n";
      return kExitCantWrite;
    }
    // Origin bottom-left: the last image row written is mb = 0.5/res.
    f << "P5\n# (la, mb) in [0,1]^2; origin bottom-left; 0 = outside "
         "stability ball, 128 = not negative definite, 255 = negative "
         "definite\n"
      << o.res << ' ' << o.res << "\n255\n";
    const std::uint8_t shade[3] = {0, 128, 255};
    for (int j = o.res - 1; j >= 0; --j)
      for (int i = 0; i < o.res; ++i) {
        const std::uint8_t px = shade[map.class_at(i, j)];
        f.write(reinterpret_cast<const char*>(&px), 1);
      }
  }
  std::cout << "sweep " << o.which << " res " << o.res << ": outside "
            << map.count_class(0) << ", bad " << map.count_class(1) << ", good "
            << map.count_class(2) << "\n";
  return 0;
}

// ---------------------------------------------------------------- converge

struct ConvergeOpts {
  int levels = 4;
  int base_res = 32;
  double lambda = 0.2;
  double t_final = 0.25;
  std::string ic = "both";
  double radius = 0.15;
};

struct Bump {
  double cx, cy, r;
  double operator()(double x, double y) const {
    const double r2 =
        ((x - cx) * (x - cx) + (y - cy) * (y - cy)) / (r * r);
    if (r2 >= 1.0) return 0.0;
    const double q = 1.0 - r2;
    return q * q * q * q;
  }
};

// Runs one refinement sequence; returns true iff the finest observed order
// lies in [1.7, 2.3]. Errors are discrete L2 norms against the advected
// exact solution u0(x + t, y + t) (unit speeds toward the corner).
bool converge_case(const ConvergeOpts& o, const Bump& bump, const char* name,
                   int* exit_code) {
  if (bump.cx + bump.r >= 1.0 || bump.cy + bump.r >= 1.0) {
    std::cerr << "converge: initial support exits the unit square\n";
    *exit_code = kExitSupportExits;
    return false;
  }
  std::vector<double> errs;
  for (int level = 0; level < o.levels; ++level) {
    const int n = o.base_res << level;
    const double dx = 1.0 / n;
    const double dt = o.lambda * dx;
    const int steps = static_cast<int>(std::lround(o.t_final / dt));
    if (std::abs(steps * dt - o.t_final) > 1e-12) {
      std::cerr << "converge: final time not a step multiple at level " << level
                << "\n";
      *exit_code = kExitUsage;
      return false;
    }
    lwq::GridSpec g{n, n, dx, dx, dt};
    const lwq::CflPair cfl = lwq::CflPair::from_speeds(-1.0, -1.0, g);
    lwq::Field2D u = lwq::project_initial_2d(bump, g);
    for (int s = 0; s < steps; ++s) u = lwq::step_2d(u, cfl, lwq::CflMode::explore);
    const lwq::Field2D exact = lwq::project_initial_2d(
        [&](double x, double y) { return bump(x + o.t_final, y + o.t_final); },
        g);
    double e2 = 0.0;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const double d = u.at(j, k) - exact.at(j, k);
        e2 += d * d * dx * dx;
      }
    errs.push_back(std::sqrt(e2));
  }
  std::cout << name << ":\n";
  bool finest_ok = false;
  for (size_t l = 0; l < errs.size(); ++l) {
    std::cout << "  level " << l << "  h = " << fmt(1.0 / (o.base_res << l))
              << "  L2 error = " << fmt(errs[l]);
    if (l > 0 && errs[l] > 0.0) {
      const double order = std::log2(errs[l - 1] / errs[l]);
      std::cout << "  order = " << fmt(order);
      if (l + 1 == errs.size()) finest_ok = order >= 1.7 && order <= 2.3;
    } else if (l > 0) {
      std::cout << "  order = exact";
      if (l + 1 == errs.size()) finest_ok = true;
    }
    std::cout << "\n";
  }
  return finest_ok;
}

int run_converge(const ConvergeOpts& o) {
  int code = 0;
  bool ok = true;
  if (o.ic == "interior" || o.ic == "both")
    ok = converge_case(o, {0.7, 0.7, o.radius}, "interior bump", &code) && ok;
  if (code != 0) return code;
  if (o.ic == "corner" || o.ic == "both")
    ok = converge_case(o, {0.25, 0.25, o.radius}, "corner-crossing bump", &code) && ok;
  if (code != 0) return code;
  std::cout << (ok ? "converge: PASS" : "converge: FAIL") << "\n";
  return ok ? 0 : kExitAuditFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quarter-plane Lax-Wendroff toolbox: simulation, energy audits, "
      "stability-region sweeps, refinement study"};
  app.require_subcommand(1);

  SimulateOpts so;
  CLI::App* sim = app.add_subcommand("simulate", "advance the 2D scheme and log the energy accounting per step (CSV)");
  sim->add_option("--nx", so.nx);
  sim->add_option("--ny", so.ny);
  sim->add_option("--dx", so.dx);
  sim->add_option("--dy", so.dy);
  sim->add_option("--dt", so.dt);
  sim->add_option("--a", so.a, "transport speed in x (must be negative)");
  sim->add_option("--b", so.b, "transport speed in y (must be negative)");
  sim->add_option("--steps", so.steps);
  sim->add_option("--c", so.c, "dissipation constant of the estimate");
  sim->add_option("--M", so.bound_m, "comparability constant for strict mode");
  sim->add_option("--eps", so.radius_eps, "Courant ball radius for strict mode");
  sim->add_option("--ic", so.ic, "gaussian | spike | file");
  sim->add_option("--ic-file", so.ic_file,
                  "whitespace-separated nx*ny doubles, row-major (j outer)");
  sim->add_option("--cx", so.cx);
  sim->add_option("--cy", so.cy);
  sim->add_option("--sigma", so.sigma);
  sim->add_option("--mode", so.mode, "strict | explore");
  sim->add_option("--out", so.out, "CSV path (stdout if omitted)");
  sim->add_option("--support-tol", so.support_tol,
                  "relative far-edge support tolerance for the accounting");

  AuditOpts ao;
  CLI::App* aud = app.add_subcommand("audit", "verify the energy identities and inequalities on random fields");
  aud->add_option("--trials", ao.trials);
  aud->add_option("--seed", ao.seed);
  aud->add_option("--alpha", ao.alpha);
  aud->add_option("--beta", ao.beta);
  aud->add_flag("--sweep-cfl", ao.sweep_cfl, "use the built-in Courant pair set");
  aud->add_option("--nx", ao.nx);
  aud->add_option("--ny", ao.ny);
  aud->add_flag("--corrupt-ghost", ao.corrupt_ghost,
                "negative control: perturb one ghost value");

  SweepOpts wo;
  CLI::App* swp = app.add_subcommand("sweep", "classify the Courant parameter square (CSV / PGM)");
  swp->add_option("--which", wo.which, "corner | reduced | boundary");
  swp->add_option("--res", wo.res)->check(CLI::Range(16, 4096));
  swp->add_option("--samples", wo.samples, "frequency samples for the boundary symbol");
  swp->add_option("--out-csv", wo.out_csv);
  swp->add_option("--out-pgm", wo.out_pgm);

  ConvergeOpts co;
  CLI::App* cvg = app.add_subcommand("converge", "grid refinement study against the exact advected solution");
  cvg->add_option("--levels", co.levels)->check(CLI::Range(2, 8));
  cvg->add_option("--base-res", co.base_res);
  cvg->add_option("--lambda", co.lambda, "Courant ratio dt/dx = dt/dy");
  cvg->add_option("--T", co.t_final);
  cvg->add_option("--ic", co.ic, "interior | corner | both");
  cvg->add_option("--radius", co.radius);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sim->parsed()) return run_simulate(so);
    if (aud->parsed()) return run_audit(ao);
    if (swp->parsed()) return run_sweep(wo);
    if (cvg->parsed()) return run_converge(co);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAuditFail;
  }
  return kExitUsage;
}
