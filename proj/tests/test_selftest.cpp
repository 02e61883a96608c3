#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dirng/rng.hpp"
#include "dirng/selftest.hpp"
#include "doctest.h"

using namespace dirng;

namespace {
constexpr double kPi4 = std::numbers::pi / 4.0;
}

TEST_SUITE_BEGIN("selftest");

TEST_CASE("long bound basics") {
  CHECK(long_bound(0.3, 0.0) == 0.0);
  CHECK(long_bound(0.3, 4e-4) ==
        doctest::Approx(2.0 * long_bound(0.3, 1e-4)).epsilon(1e-12));
  CHECK_THROWS_AS(long_bound(0.0, 1e-4), std::domain_error);
  CHECK_THROWS_AS(long_bound(0.3, -1e-9), std::domain_error);
}

TEST_CASE("simplified constant") {
  CHECK(simplified_bound_constant() ==
        doctest::Approx(94.26702730475879).epsilon(1e-14));
  CHECK(std::abs(simplified_bound_constant() - 94.2671) <= 1e-4);
  const double theta = 0.4, eps = 2.5e-3;
  const double s = std::sin(2.0 * theta);
  CHECK(simplified_bound(theta, eps) * s * s * s * s / std::sqrt(eps) ==
        doctest::Approx(simplified_bound_constant()).epsilon(1e-12));
  CHECK(simplified_bound(theta, 0.0) == 0.0);
}

TEST_CASE("simplified bound dominates the long bound on a grid") {
  for (int ti = 1; ti <= 200; ++ti) {
    const double theta = kPi4 * ti / 200.0;
    for (int ei = 0; ei < 200; ++ei) {
      const double eps = std::pow(10.0, -12.0 + 13.0 * ei / 199.0);
      CHECK(simplified_bound(theta, eps) >= long_bound(theta, eps));
    }
  }
}

TEST_CASE("numeric maximization reproduces the tighter constant") {
  const FactorMaximum max = max_long_bound_factor();
  CHECK(max.value > 44.6);
  CHECK(max.value < 45.6);
  CHECK(max.value == doctest::Approx(45.129666).epsilon(1e-6));
  CHECK(max.theta_star == doctest::Approx(0.5368388).epsilon(1e-4));
  // Consistency: the factor equals s^4 * long_bound / sqrt(eps) at the peak.
  const double s = std::sin(2.0 * max.theta_star);
  CHECK(long_bound(max.theta_star, 1.0) * s * s * s * s ==
        doctest::Approx(max.value).epsilon(1e-12));
}

TEST_CASE("guessing probability bound") {
  const GameSpec g = game_from_beta(0.0);
  CHECK(pguess_bound(g, g.omega_q) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pguess_bound(g, 0.5) == 1.0);  // deficit huge: clipped at 1
  CHECK_THROWS_AS(pguess_bound(g, g.omega_q + 1e-6), std::domain_error);

  // Additive term arithmetic at beta = 0, theta = pi/4. The deficit is
  // rebuilt from omega exactly as the implementation sees it.
  const double omega = g.omega_q - 1e-9;
  const double expected = 0.5 + std::sqrt(8.0) * 94.26702730475879 *
                                    std::pow(kPi4, -4.0) *
                                    std::sqrt(g.omega_q - omega);
  CHECK(pguess_bound(g, omega) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(std::pow(kPi4, -4.0) == doctest::Approx(2.62809).epsilon(1e-4));

  // Optional tighter constant only shrinks the bound.
  CHECK(pguess_bound(g, omega, 45.13) < pguess_bound(g, omega));
}

TEST_CASE("min-entropy bound g") {
  const GameSpec g = game_from_beta(0.0);
  CHECK(g_bound(g, g.omega_q) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g.kappa == doctest::Approx(8.0 * (4.0 * std::sqrt(2.0) + 61.0) /
                                   std::log(2.0))
                       .epsilon(1e-14));
  CHECK(g.kappa <= 385.0 * 2.0);
  // Raw values go negative; no clamping.
  CHECK(g_bound(g, 0.75) < 0.0);
}

TEST_CASE("g is convex in omega") {
  // Midpoint convexity g(w1) + g(w2) >= 2 g((w1+w2)/2), the direction the
  // tangent construction relies on.
  const GameSpec g = game_from_beta(0.4);
  const CounterRng rng(31);
  for (int i = 0; i < 500; ++i) {
    const double w1 = g.omega_q * rng.uniform(Stream::kGeneric, i, 0);
    const double w2 = g.omega_q * rng.uniform(Stream::kGeneric, i, 1);
    const double lhs = g_bound(g, w1) + g_bound(g, w2);
    const double rhs = 2.0 * g_bound(g, 0.5 * (w1 + w2));
    CHECK(lhs >= rhs - 1e-12);
  }
}

TEST_CASE("bound chain consistency") {
  // 1 - log2(2 pguess) >= g whenever pguess is not clipped: the ln(1+x) <= x
  // step only loosens.
  for (double beta : {0.0, 0.7, 1.5}) {
    const GameSpec g = game_from_beta(beta);
    for (int i = 1; i <= 200; ++i) {
      const double omega = g.omega_q - 1e-12 * std::pow(10.0, 6.0 * i / 200.0);
      if (omega < 0.5) continue;
      const double pg = pguess_bound(g, omega);
      if (pg >= 1.0) continue;
      CHECK(1.0 - std::log2(2.0 * pg) >= g_bound(g, omega) - 1e-9);
    }
  }
}

TEST_CASE("bounds weaken monotonically with the deficit") {
  const GameSpec g = game_from_beta(1.0);
  double prev_p = 0.0, prev_g = 2.0;
  for (int i = 0; i <= 50; ++i) {
    const double omega = g.omega_q - 1e-6 * i;
    const double pg = pguess_bound(g, omega);
    const double gb = g_bound(g, omega);
    CHECK(pg >= prev_p);
    CHECK(gb <= prev_g);
    prev_p = pg;
    prev_g = gb;
  }
}

TEST_SUITE_END();
