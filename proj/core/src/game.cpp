#include "dirng/game.hpp"

#include <cmath>
#include <stdexcept>

namespace dirng {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;

GameSpec finish(double beta, double theta) {
  GameSpec spec;
  spec.beta = beta;
  spec.theta = theta;
  spec.i_q = std::sqrt(8.0 + 2.0 * beta * beta);
  spec.omega_q = 0.5 + spec.i_q / (8.0 + 2.0 * beta);
  spec.omega_c = 0.5 + (2.0 + beta) / (8.0 + 2.0 * beta);
  spec.kappa = 4.0 * std::sqrt(4.0 + beta) * (4.0 * std::sqrt(2.0) + 61.0) / kLn2;
  return spec;
}

}  // namespace

GameSpec game_from_beta(double beta) {
  if (!(beta >= 0.0 && beta < 2.0))
    throw std::domain_error("game_from_beta: beta must lie in [0, 2)");
  const double theta =
      beta == 0.0 ? kPi / 4.0
                  : 0.5 * std::atan(std::sqrt(2.0 / (beta * beta) - 0.5));
  return finish(beta, theta);
}

GameSpec game_from_theta(double theta) {
  if (!(theta > 0.0 && theta <= kPi / 4.0))
    throw std::domain_error("game_from_theta: theta must lie in (0, pi/4]");
  const double s = std::sin(2.0 * theta);
  const double c = std::cos(2.0 * theta);
  // beta = 2 cos(2 theta) / sqrt(1 + sin^2(2 theta)); rounds to 2 for
  // theta below ~1e-9, which downstream formulas tolerate.
  const double beta = 2.0 * c / std::sqrt(1.0 + s * s);
  return finish(beta, theta);
}

double classical_quantum_gap(const GameSpec& spec) {
  const double s = std::sin(2.0 * spec.theta);
  const double c = std::cos(2.0 * spec.theta);
  const double r = std::sqrt(1.0 + s * s);
  // u = 2 - beta = 2 (r - c) / r with r - c expanded to avoid cancellation.
  const double u = 2.0 * (2.0 * s * s / (r + c)) / r;
  const double beta = 2.0 - u;
  return u * u /
         ((8.0 + 2.0 * beta) * (std::sqrt(8.0 + 2.0 * beta * beta) + 2.0 + beta));
}

double InputDistribution::prob(int x, int y) const {
  if (x == 0 && y == 2) return trivial_weight;
  if ((x == 0 || x == 1) && (y == 0 || y == 1)) return pair_weight;
  return 0.0;
}

InputDistribution input_distribution(const GameSpec& spec) {
  InputDistribution dist;
  dist.pair_weight = 1.0 / (4.0 + spec.beta);
  dist.trivial_weight = spec.beta / (4.0 + spec.beta);
  return dist;
}

bool in_support(int x, int y) {
  if ((x == 0 || x == 1) && (y == 0 || y == 1)) return true;
  return x == 0 && y == 2;
}

bool predicate(int a, int b, int x, int y) {
  if ((a & ~1) || (b & ~1) || !in_support(x, y))
    throw std::domain_error("predicate: inputs outside the game support");
  if (y == 2) return a == 0;
  return (a ^ b) == (x & y);
}

double omega_from_tilted_value(const GameSpec& spec, double i_value) {
  if (!(std::abs(i_value) <= spec.i_q * (1.0 + 1e-12)))
    throw std::domain_error(
        "omega_from_tilted_value: |i_value| exceeds the quantum maximum");
  if (i_value == spec.i_q) return spec.omega_q;
  return 0.5 + i_value / (8.0 + 2.0 * spec.beta);
}

double game_value(const GameSpec& spec, const ConditionalTable& table) {
  const InputDistribution dist = input_distribution(spec);
  double value = 0.0;
  for (const auto& xy : InputDistribution::kSupport) {
    const int x = xy[0], y = xy[1];
    double win = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        if (predicate(a, b, x, y)) win += table[x][y][a][b];
    value += dist.prob(x, y) * win;
  }
  return value;
}

double tilted_chsh_value(const GameSpec& spec, const ConditionalTable& table) {
  auto correlator = [&table](int x, int y) {
    double e = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        e += ((a ^ b) ? -1.0 : 1.0) * table[x][y][a][b];
    return e;
  };
  double a0_marginal = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      a0_marginal += (a ? -1.0 : 1.0) * table[0][2][a][b];
  return spec.beta * a0_marginal + correlator(0, 0) + correlator(0, 1) +
         correlator(1, 0) - correlator(1, 1);
}

}  // namespace dirng
