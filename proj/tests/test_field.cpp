#include <random>

#include "doctest.h"
#include "lwq/field.hpp"

using lwq::Field1D;
using lwq::Field2D;
using lwq::GridSpec;

TEST_CASE("1D ghosts extend affine data exactly") {
  Field1D f(8);
  for (int j = 0; j < 8; ++j) f.at(j) = 3.0 - 0.5 * j;
  f.fill_ghosts();
  CHECK(f.at(-1) == 3.5);
  CHECK(f.at(8) == -1.0);
}

TEST_CASE("2D edge ghosts follow second-order extrapolation") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  Field2D f(6, 5);
  for (int j = 0; j < 6; ++j)
    for (int k = 0; k < 5; ++k) f.at(j, k) = d(rng);
  f.fill_ghosts();
  for (int k = 0; k < 5; ++k) {
    CHECK(f.at(-1, k) == 2.0 * f.at(0, k) - f.at(1, k));
    CHECK(f.at(6, k) == 2.0 * f.at(5, k) - f.at(4, k));
  }
  for (int j = 0; j < 6; ++j) {
    CHECK(f.at(j, -1) == 2.0 * f.at(j, 0) - f.at(j, 1));
    CHECK(f.at(j, 5) == 2.0 * f.at(j, 4) - f.at(j, 3));
  }
}

TEST_CASE("ghost corner is the bilinear combination, bit-exact") {
  Field2D f(4, 4);
  f.at(0, 0) = 1.0;
  f.at(1, 0) = 2.0;
  f.at(0, 1) = 3.0;
  f.at(1, 1) = 4.0;
  f.fill_ghosts();
  CHECK(f.at(-1, -1) == 4.0 * 1.0 - 2.0 * 2.0 - 2.0 * 3.0 + 4.0);  // -2
  CHECK(f.at(-1, -1) == -2.0);

  // The corner value must equal the 4/-2/-2/1 interior combination exactly,
  // not merely the extrapolation of an extrapolated edge.
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Field2D g(5, 5);
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k) g.at(j, k) = d(rng);
    g.fill_ghosts();
    CHECK(g.at(-1, -1) == 4.0 * g.at(0, 0) - 2.0 * g.at(1, 0) -
                              2.0 * g.at(0, 1) + g.at(1, 1));
    CHECK(g.at(5, 5) == 4.0 * g.at(4, 4) - 2.0 * g.at(3, 4) -
                            2.0 * g.at(4, 3) + g.at(3, 3));
  }
}

TEST_CASE("ghosts extend affine 2D data exactly, corners included") {
  Field2D f(5, 6);
  auto plane = [](double x, double y) { return 2.0 + 0.25 * x - 0.5 * y; };
  for (int j = 0; j < 5; ++j)
    for (int k = 0; k < 6; ++k) f.at(j, k) = plane(j, k);
  f.fill_ghosts();
  for (int j = -1; j <= 5; ++j)
    for (int k = -1; k <= 6; ++k)
      CHECK(f.at(j, k) == doctest::Approx(plane(j, k)).epsilon(1e-15));
}

TEST_CASE("cell-average projection reproduces constants and linears") {
  GridSpec g{8, 8, 0.125, 0.125, 0.01};
  const Field2D c = lwq::project_initial_2d(
      [](double, double) { return 3.25; }, g);
  CHECK(c.at(3, 5) == doctest::Approx(3.25));
  const Field2D l = lwq::project_initial_2d(
      [](double x, double y) { return x + 2.0 * y; }, g);
  // Two-point Gauss integrates linears exactly; cell average at the center.
  CHECK(l.at(2, 1) == doctest::Approx(0.125 * 2.5 + 2.0 * 0.125 * 1.5));
}

TEST_CASE("far-edge support check") {
  Field2D f(10, 10);
  f.at(2, 2) = 1.0;
  f.fill_ghosts();
  CHECK(lwq::support_clear_of_far_edges(f));
  f.at(8, 2) = 1e-20;
  f.fill_ghosts();
  CHECK_FALSE(lwq::support_clear_of_far_edges(f));
  CHECK(lwq::support_clear_of_far_edges(f, 3, 1e-12));
}
