#pragma once

// Shared test oracles. Everything here is computed independently of the
// library paths under test: binomial tails go through lgamma directly, and
// the strategy search parameterizes devices from scratch.

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <span>
#include <vector>

#include "dirng/devices.hpp"
#include "dirng/game.hpp"
#include "dirng/numeric.hpp"
#include "dirng/rng.hpp"

namespace testsupport {

// chi^2 upper quantiles at the 1e-6 level (scipy.stats.chi2.ppf(1-1e-6, df)).
inline constexpr double kChi2Crit1 = 23.92812697687947;
inline constexpr double kChi2Crit3 = 30.66484970615427;

inline double log_binom_pmf(std::uint64_t n, double p, std::uint64_t k) {
  return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
         std::lgamma(double(n - k) + 1.0) + double(k) * std::log(p) +
         double(n - k) * std::log1p(-p);
}

// P[Bin(n, p) <= k], exact log-domain sum.
inline double binom_cdf(std::uint64_t n, double p, std::int64_t k) {
  if (k < 0) return 0.0;
  if (k >= std::int64_t(n)) return 1.0;
  double acc = -std::numeric_limits<double>::infinity();
  for (std::uint64_t j = 0; j <= std::uint64_t(k); ++j) {
    const double term = log_binom_pmf(n, p, j);
    const double hi = std::max(acc, term), lo = std::min(acc, term);
    acc = hi + std::log1p(std::exp(lo - hi));
  }
  return std::exp(acc);
}

// Exact probability that the protocol threshold test passes: wins are
// Binomial(n, gamma * omega) and the protocol succeeds when
// wins >= n gamma (omega_q - xi).
inline double exact_success_probability(std::uint64_t n, double gamma,
                                        double omega, double threshold) {
  const std::int64_t max_fail =
      std::int64_t(std::ceil(threshold)) - 1;  // largest losing win count
  return 1.0 - binom_cdf(n, gamma * omega, max_fail);
}

// Pearson statistic over the outcome cells of one setting.
inline double chi2_statistic(const std::array<std::uint64_t, 4>& observed,
                             const dirng::OutcomeDistribution& expected,
                             std::uint64_t samples) {
  double stat = 0.0;
  for (int cell = 0; cell < 4; ++cell) {
    const double exp_count = expected.p[cell] * double(samples);
    if (exp_count == 0.0) continue;
    const double diff = double(observed[cell]) - exp_count;
    stat += diff * diff / exp_count;
  }
  return stat;
}

// Random conditional table p(a,b|x,y), normalized per setting.
inline dirng::ConditionalTable random_table(const dirng::CounterRng& rng,
                                            std::uint64_t index) {
  dirng::ConditionalTable table{};
  std::uint64_t draw = 0;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 3; ++y) {
      double total = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const double v =
              rng.uniform(dirng::Stream::kGeneric, index, draw++) + 1e-6;
          table[x][y][a][b] = v;
          total += v;
        }
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) table[x][y][a][b] /= total;
    }
  return table;
}

inline dirng::BlochVector bloch_from_angles(double polar, double azimuth) {
  return {std::sin(polar) * std::cos(azimuth),
          std::sin(polar) * std::sin(azimuth), std::cos(polar)};
}

// Device from a 9-parameter point: Schmidt angle plus two angles per
// observable. The Schmidt angle is folded into [0, pi/4] smoothly so the
// simplex search stays unconstrained.
inline dirng::DeviceModel device_from_params(std::span<const double> p) {
  const double phi =
      std::numbers::pi / 8.0 * (1.0 + std::sin(p[0]));  // in [0, pi/4]
  dirng::DeviceModel dev;
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  psi(0) = std::cos(phi);
  psi(3) = std::sin(phi);
  dev.state = psi * psi.adjoint();
  dev.alice[0] = bloch_from_angles(p[1], p[2]);
  dev.alice[1] = bloch_from_angles(p[3], p[4]);
  dev.bob[0] = bloch_from_angles(p[5], p[6]);
  dev.bob[1] = bloch_from_angles(p[7], p[8]);
  return dev;
}

// Best winning probability found by a multi-start simplex search over
// two-qubit strategies (state Schmidt angle and all four observables).
inline double max_qubit_strategy(const dirng::GameSpec& spec, int restarts,
                                 std::uint64_t seed = 20240901) {
  const dirng::CounterRng rng(seed);
  auto negated = [&spec](std::span<const double> p) {
    return -dirng::winning_probability(device_from_params(p), spec);
  };
  double best = 0.0;
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> start(9);
    for (int d = 0; d < 9; ++d)
      start[d] = rng.uniform(dirng::Stream::kGeneric, r, d) * std::numbers::pi;
    const auto result =
        dirng::numeric::nelder_mead_min(negated, start, 0.35, 4000, 1e-15);
    best = std::max(best, -result.value);
  }
  return best;
}

// All 32 local deterministic strategies (4 response functions for Alice,
// 8 for Bob): the classical polytope's vertices.
inline double max_deterministic_strategy(const dirng::GameSpec& spec) {
  const dirng::InputDistribution inputs = dirng::input_distribution(spec);
  double best = 0.0;
  for (int alice = 0; alice < 4; ++alice)
    for (int bob = 0; bob < 8; ++bob) {
      double omega = 0.0;
      for (const auto& xy : dirng::InputDistribution::kSupport) {
        const int x = xy[0], y = xy[1];
        const int a = (alice >> x) & 1;
        const int b = (bob >> y) & 1;
        if (dirng::predicate(a, b, x, y)) omega += inputs.prob(x, y);
      }
      best = std::max(best, omega);
    }
  return best;
}

}  // namespace testsupport
