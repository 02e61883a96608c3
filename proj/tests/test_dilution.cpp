#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dirng/dilution.hpp"
#include "dirng/rng.hpp"
#include "doctest.h"

using namespace dirng;

namespace {
constexpr double kPi = std::numbers::pi;

// The grid shared by the Hoeffding-dominance and distance-dominance checks:
// 5 angles x 10 sizes x 10 slacks = 500 points. Generic (non-round) slack
// ratios keep the band edges away from exact integer boundaries.
struct GridPoint {
  double theta;
  std::uint64_t n;
  double delta;
};

std::vector<GridPoint> dominance_grid() {
  std::vector<GridPoint> grid;
  const double theta_lo = kPi / 16.0, theta_hi = kPi / 4.01;
  for (int ti = 0; ti < 5; ++ti) {
    const double theta = theta_lo + (theta_hi - theta_lo) * ti / 4.0;
    const double spread = typicality_spread(theta);
    for (int ni = 0; ni < 10; ++ni) {
      const auto n = static_cast<std::uint64_t>(
          std::llround(std::pow(10.0, 1.0 + 3.0 * ni / 9.0)));
      for (int di = 0; di < 10; ++di) {
        const double ratio = 0.0137 + (0.2993 - 0.0137) * di / 9.0;
        grid.push_back({theta, n, ratio * spread});
      }
    }
  }
  return grid;
}

}  // namespace

TEST_SUITE_BEGIN("dilution");

TEST_CASE("entropy of entanglement") {
  CHECK(entanglement_entropy(kPi / 4.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(entanglement_entropy(kPi / 8.0) ==
        doctest::Approx(0.6008760366928561).epsilon(1e-12));
  CHECK(std::abs(entanglement_entropy(kPi / 8.0) - 0.60088) < 1e-5);
  CHECK_THROWS_AS(entanglement_entropy(0.0), std::domain_error);
  CHECK_THROWS_AS(entanglement_entropy(1.0), std::domain_error);
}

TEST_CASE("small-angle entropy approaches theta^2 log2 theta^-2") {
  double prev_gap = 1.0;
  for (double theta : {1e-3, 1e-6, 1e-9, 1e-12}) {
    const double asym = theta * theta * std::log2(1.0 / (theta * theta));
    const double ratio = entanglement_entropy(theta) / asym;
    CHECK(ratio > 1.0);
    CHECK(ratio - 1.0 < prev_gap);
    prev_gap = ratio - 1.0;
  }
  CHECK(entanglement_entropy(1e-12) /
            (1e-24 * std::log2(1e24)) <
        1.02);
}

TEST_CASE("typicality spread") {
  CHECK(typicality_spread(kPi / 4.0) == 0.0);
  CHECK(typicality_spread(kPi / 8.0) ==
        doctest::Approx(2.543106606327224).epsilon(1e-12));
  CHECK(typicality_spread(0.1) > 0.0);
}

TEST_CASE("projection error closed form") {
  const double spread = typicality_spread(kPi / 8.0);
  const double expected = 2.0 * std::exp(-2.0 * 1000.0 * 0.01 / (spread * spread));
  CHECK(epsilon_pi(kPi / 8.0, 1000.0, 0.1) ==
        doctest::Approx(expected).epsilon(1e-14));
  CHECK(epsilon_pi(kPi / 8.0, 1000.0, 0.1) ==
        doctest::Approx(0.0907824).epsilon(1e-5));
  // Vacuous as delta -> 0 (callers clamp to 1 when used as a probability).
  CHECK(epsilon_pi(kPi / 8.0, 1000.0, 1e-300) == doctest::Approx(2.0));
  // Exponent scales as delta^2.
  const double e1 = -std::log(epsilon_pi(kPi / 8.0, 500.0, 0.05) / 2.0);
  const double e2 = -std::log(epsilon_pi(kPi / 8.0, 500.0, 0.10) / 2.0);
  CHECK(e2 == doctest::Approx(4.0 * e1).epsilon(1e-12));
  // Degenerate angle convention.
  CHECK(epsilon_pi(kPi / 4.0, 1000.0, 0.1) == 0.0);
}

TEST_CASE("preparation error") {
  CHECK(epsilon_prep(0.01) == doctest::Approx(0.21).epsilon(1e-15));
  CHECK(epsilon_prep(0.0) == 0.0);
  double prev = -1.0;
  for (int i = 0; i <= 20; ++i) {
    const double v = epsilon_prep(i * 0.05);
    CHECK(v > prev);
    prev = v;
  }
  CHECK_THROWS_AS(epsilon_prep(-1e-9), std::domain_error);
}

TEST_CASE("singlet count") {
  CHECK(singlet_count(kPi / 4.0, 100, 0.01) == 101);
  CHECK(singlet_count(kPi / 4.0, 10, 0.0) == 10);
  const double entropy = entanglement_entropy(0.3);
  // m/n approaches S + delta as the ceiling washes out.
  const double mn = double(singlet_count(0.3, 10000000, 0.02)) / 1e7;
  CHECK(mn == doctest::Approx(entropy + 0.02).epsilon(1e-7));
  // Genuine dilution (m < n) exactly when S + delta < 1.
  CHECK(singlet_count(0.3, 1000, 0.01) < 1000);
  CHECK(singlet_count(kPi / 4.0, 1000, 0.05) > 1000);
}

TEST_CASE("typical set structure and bounds") {
  const double theta = kPi / 8.0;
  const double entropy = entanglement_entropy(theta);
  const double spread = typicality_spread(theta);
  const double q1 = std::sin(theta) * std::sin(theta);
  for (std::uint64_t n : {10ULL, 100ULL, 1000ULL, 10000ULL}) {
    const double delta = 0.08 * spread;
    const TypicalSetSummary ts = typical_set(theta, n, delta);
    REQUIRE_FALSE(ts.empty);
    // Integer band within the rounding-widened frequency window.
    CHECK(double(ts.lo) / double(n) >= q1 - delta / spread - 0.5 / double(n));
    CHECK(double(ts.hi) / double(n) <= q1 + delta / spread + 0.5 / double(n));
    CHECK(ts.cardinality_log2 <= double(n) * (entropy + delta));
    CHECK(ts.probability >= 1.0 - epsilon_pi(theta, double(n), delta));
    CHECK(ts.probability <= 1.0);
  }
}

TEST_CASE("one-round typical set with a wide window") {
  const TypicalSetSummary ts = typical_set(0.5, 1, 10.0);
  CHECK_FALSE(ts.empty);
  CHECK(ts.lo == 0);
  CHECK(ts.hi == 1);
  CHECK(ts.probability == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("empty typical set is reported") {
  // Tiny n with a narrow window around a fractional mean count.
  const double theta = kPi / 16.0;
  const double spread = typicality_spread(theta);
  const TypicalSetSummary ts = typical_set(theta, 3, 1e-3 * spread);
  CHECK(ts.empty);
  CHECK(ts.probability == 0.0);
  CHECK(ts.atypical_log_weight == doctest::Approx(0.0));
}

TEST_CASE("sample entropy identity") {
  const double theta = 0.31;
  const double q0 = std::cos(theta) * std::cos(theta);
  const double q1 = 1.0 - q0;
  const double spread = typicality_spread(theta);
  const CounterRng rng(999);
  const std::uint64_t n = 400;
  for (int trial = 0; trial < 50; ++trial) {
    std::uint64_t ones = 0;
    double log2_p = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
      const bool bit = rng.uniform(Stream::kGeneric, trial * n + i) < q1;
      ones += bit;
      log2_p += std::log2(bit ? q1 : q0);
    }
    const double sample_entropy = -log2_p / double(n);
    const double closed =
        -std::log2(q0) + double(ones) / double(n) * spread;
    CHECK(sample_entropy == doctest::Approx(closed).epsilon(1e-12));
  }
}

TEST_CASE("frequency window selects the same band as the entropy window") {
  const double theta = 0.42;
  const double q1 = std::sin(theta) * std::sin(theta);
  const double spread = typicality_spread(theta);
  for (std::uint64_t n : {7ULL, 64ULL, 301ULL, 1024ULL}) {
    for (double ratio : {0.0173, 0.093, 0.2211}) {
      const TypicalSetSummary ts = typical_set(theta, n, ratio * spread);
      std::int64_t lo = -1, hi = -1;
      for (std::uint64_t j = 0; j <= n; ++j) {
        if (std::abs(double(j) / double(n) - q1) <= ratio) {
          if (lo < 0) lo = std::int64_t(j);
          hi = std::int64_t(j);
        }
      }
      CHECK(ts.empty == (lo < 0));
      if (lo >= 0) {
        CHECK(ts.lo == lo);
        CHECK(ts.hi == hi);
      }
    }
  }
}

TEST_CASE("Hoeffding dominates the exact atypical weight") {
  for (const auto& pt : dominance_grid()) {
    const TypicalSetSummary ts = typical_set(pt.theta, pt.n, pt.delta);
    const double exact_atypical = std::exp(ts.atypical_log_weight);
    CHECK(exact_atypical <=
          epsilon_pi(pt.theta, double(pt.n), pt.delta) + 1e-15);
  }
}

TEST_CASE("exact distance obeys the closed-form and prep bounds") {
  for (const auto& pt : dominance_grid()) {
    const TypicalSetSummary ts = typical_set(pt.theta, pt.n, pt.delta);
    const double atypical = std::exp(ts.atypical_log_weight);
    const double distance = exact_dilution_distance(pt.theta, pt.n, pt.delta);
    const double closed = 2.0 * std::sqrt(atypical) + atypical;
    const double prep =
        epsilon_prep(epsilon_pi(pt.theta, double(pt.n), pt.delta));
    CHECK(distance <= closed + 1e-12);
    CHECK(distance <= prep + 1e-12);
    CHECK(distance >= 0.0);
    CHECK(distance <= 2.0 + 1e-12);
  }
}

TEST_CASE("distance vanishes when every string is typical") {
  const double theta = kPi / 8.0;
  const double spread = typicality_spread(theta);
  CHECK(exact_dilution_distance(theta, 50, 10.0 * spread) == 0.0);
}

TEST_CASE("distance is nonincreasing in delta") {
  const double theta = kPi / 8.0;
  const double spread = typicality_spread(theta);
  double prev = 3.0;
  for (int i = 1; i <= 12; ++i) {
    const double delta = 0.02 * i * spread;
    const double d = exact_dilution_distance(theta, 500, delta);
    CHECK(d <= prev + 1e-12);
    prev = d;
  }
}

TEST_CASE("dilution completeness composes the two error terms") {
  ProtocolParams p;
  p.n = 1000000;
  p.gamma = 0.1;
  p.xi = 0.01;
  p.eps_s = 1e-8;
  p.eps_prime = 1e-8;
  DilutionSpec dspec{};
  dspec.eps_pi = 0.01;
  dspec.eps_prep = epsilon_prep(dspec.eps_pi);
  CHECK(dilution_completeness(p, dspec) ==
        doctest::Approx(0.240335283236613).epsilon(1e-12));
  dspec.eps_pi = 0.0;
  dspec.eps_prep = 0.0;
  CHECK(dilution_completeness(p, dspec) ==
        doctest::Approx(completeness_error(p)).epsilon(1e-15));
}

TEST_SUITE_END();
