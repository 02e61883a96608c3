#include "dirng/selftest.hpp"

#include <cmath>
#include <stdexcept>

#include "dirng/numeric.hpp"

namespace dirng {
namespace {

constexpr double kPi = 3.14159265358979323846;

void check_domain(double theta, double epsilon) {
  if (!(theta > 0.0 && theta <= kPi / 4.0))
    throw std::domain_error("selftest bound: theta must lie in (0, pi/4]");
  if (!(epsilon >= 0.0))
    throw std::domain_error("selftest bound: epsilon must be nonnegative");
}

// sin^4(2 theta) times the bracket of the full bound, kept in product form so
// it stays finite as theta -> 0.
double s4_bracket(double theta) {
  const double c = std::cos(2.0 * theta);
  const double s = std::sin(2.0 * theta);
  const double r = std::sqrt(1.0 + s * s);
  const double t1 = r * s * s * (1.0 + c + r) / 2.0;
  const double t2 = r * s * s * s * (2.0 - c + r) / 4.0;
  const double t3 = (c + r) * (1.0 + c) *
                    (8.0 * s * s + 2.0 * (1.0 + r) + 3.0 * s * s * std::tan(theta)) /
                    2.0;
  return t1 + t2 + t3;
}

double sqrt_2iq(double theta) {
  const double s = std::sin(2.0 * theta);
  return std::sqrt(8.0 / std::sqrt(1.0 + s * s));
}

double deficit_or_throw(const GameSpec& spec, double omega) {
  double deficit = spec.omega_q - omega;
  if (deficit < -1e-9)
    throw std::domain_error("bound: omega exceeds the quantum maximum");
  return deficit < 0.0 ? 0.0 : deficit;
}

}  // namespace

double simplified_bound_constant() { return 8.0 + 61.0 * std::sqrt(2.0); }

double long_bound(double theta, double epsilon) {
  check_domain(theta, epsilon);
  const double s = std::sin(2.0 * theta);
  return sqrt_2iq(theta) * std::sqrt(epsilon) * s4_bracket(theta) /
         (s * s * s * s);
}

double simplified_bound(double theta, double epsilon) {
  check_domain(theta, epsilon);
  const double s = std::sin(2.0 * theta);
  return simplified_bound_constant() * std::sqrt(epsilon) / (s * s * s * s);
}

FactorMaximum max_long_bound_factor(int grid_points) {
  auto factor = [](double theta) { return sqrt_2iq(theta) * s4_bracket(theta); };
  double best_theta = kPi / 4.0;
  double best = factor(best_theta);
  for (int i = 1; i < grid_points; ++i) {
    const double theta = kPi / 4.0 * static_cast<double>(i) / grid_points;
    const double v = factor(theta);
    if (v > best) {
      best = v;
      best_theta = theta;
    }
  }
  const double width = kPi / 4.0 / grid_points;
  const double lo = std::max(best_theta - 2.0 * width, 1e-12);
  const double hi = std::min(best_theta + 2.0 * width, kPi / 4.0);
  const auto refined = numeric::golden_section_max(factor, lo, hi, 1e-13);
  return {refined.x, refined.value};
}

double pguess_bound(const GameSpec& spec, double omega) {
  return pguess_bound(spec, omega, simplified_bound_constant());
}

double pguess_bound(const GameSpec& spec, double omega, double constant) {
  const double deficit = deficit_or_throw(spec, omega);
  const double t4 = std::pow(spec.theta, 4.0);
  const double term =
      std::sqrt(8.0 + 2.0 * spec.beta) * constant * std::sqrt(deficit) / t4;
  const double p = 0.5 + term;
  return p > 1.0 ? 1.0 : p;
}

double g_bound(const GameSpec& spec, double omega) {
  const double deficit = deficit_or_throw(spec, omega);
  const double t4 = std::pow(spec.theta, 4.0);
  return 1.0 - spec.kappa * std::sqrt(deficit) / t4;
}

}  // namespace dirng
