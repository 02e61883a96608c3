#include "dirng/scaling.hpp"

#include <cmath>
#include <stdexcept>

#include "dirng/dilution.hpp"
#include "dirng/numeric.hpp"

namespace dirng {
namespace {

constexpr double kPi = 3.14159265358979323846;

double kappa_times_theta4_sqrt(double theta, double zeta) {
  const GameSpec spec = game_from_theta(theta);
  return spec.kappa * std::sqrt(zeta) / std::pow(theta, 4.0);
}

}  // namespace

std::vector<std::string> validate_schedule(const ExponentSchedule& s) {
  std::vector<std::string> violations;
  if (!(s.lambda_theta > 0.0 && s.lambda_xi > 0.0 && s.lambda_gamma > 0.0))
    violations.push_back("lambda_theta, lambda_xi, lambda_gamma > 0");
  if (!(s.lambda_theta < 2.0 * s.lambda_xi))
    violations.push_back("lambda_theta < 2*lambda_xi");
  if (!(s.lambda_xi + s.lambda_gamma < 0.5))
    violations.push_back("lambda_xi + lambda_gamma < 1/2");
  if (s.lambda_c != 0.0 &&
      !(s.lambda_c > 0.0 && s.lambda_c < s.lambda_theta))
    violations.push_back("0 < lambda_c < lambda_theta");
  return violations;
}

ScaledParams params_for_n(const ExponentSchedule& schedule, double n) {
  if (!(n >= 2.0)) throw std::domain_error("params_for_n: n must be >= 2");
  ScaledParams p;
  const double log_n = std::log(n);
  p.theta = std::exp(-schedule.lambda_theta / 16.0 * log_n);
  if (p.theta > kPi / 4.0) {
    p.theta = kPi / 4.0;
    p.theta_clamped = true;
  }
  p.xi = std::exp(-schedule.lambda_xi * log_n);
  p.gamma = std::exp(-schedule.lambda_gamma * log_n);
  if (schedule.lambda_c > 0.0)
    p.delta = entanglement_entropy(p.theta) *
              std::exp(schedule.lambda_c / 8.0 * log_n);
  return p;
}

EntanglementCost entanglement_consumed(const ExponentSchedule& schedule,
                                       double n, bool diluted) {
  const ScaledParams p = params_for_n(schedule, n);
  const double entropy = entanglement_entropy(p.theta);
  EntanglementCost cost;
  cost.exact = diluted ? n * (entropy + p.delta) : n * entropy;
  const double exponent = diluted ? schedule.k_prime() : schedule.k();
  cost.asymptotic = schedule.lambda_theta / 8.0 *
                    std::exp(exponent * std::log(n)) * std::log2(n);
  cost.ratio = cost.exact / cost.asymptotic;
  return cost;
}

NoiseFeasibility noise_feasible_theta(double zeta) {
  if (!(zeta > 0.0)) throw std::domain_error("noise_feasible_theta: zeta <= 0");
  NoiseFeasibility result;
  // kappa(theta) theta^-4 sqrt(zeta) is strictly decreasing in theta, so the
  // boundary is a simple bisection target.
  if (kappa_times_theta4_sqrt(kPi / 4.0, zeta) >= 1.0) {
    result.feasible = false;
    result.theta_min = kPi / 4.0;
    return result;
  }
  double lo = 1e-12, hi = kPi / 4.0;
  if (kappa_times_theta4_sqrt(lo, zeta) < 1.0) {
    // Already feasible at the bottom of the search window.
    result.feasible = true;
    result.theta_min = lo;
    return result;
  }
  while ((hi - lo) > 1e-15 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (kappa_times_theta4_sqrt(mid, zeta) < 1.0)
      hi = mid;
    else
      lo = mid;
  }
  result.feasible = true;
  result.theta_min = hi;
  return result;
}

std::vector<SweepRow> sweep(const ExponentSchedule& schedule,
                            const std::vector<double>& n_grid, bool diluted,
                            double eps_s, double eps_prime) {
  std::vector<SweepRow> rows;
  rows.reserve(n_grid.size());
  for (double n : n_grid) {
    SweepRow row;
    row.n = n;
    row.params = params_for_n(schedule, n);
    const GameSpec spec = game_from_theta(row.params.theta);
    const EntropyCertificate cert =
        certificate(spec, CertificateParams{n, row.params.gamma,
                                            row.params.xi, eps_s, eps_prime});
    row.nu = cert.nu;
    row.tau_closed = cert.tau_closed;
    row.tau_optimized = cert.tau_optimized;
    row.hmin_per_n = cert.hmin_bound / n;

    const double gx = row.params.gamma * row.params.xi;
    const double log_hoeffding = -2.0 * n * gx * gx;
    if (diluted) {
      // log eps_prep from log eps_pi = ln 2 - 2 n (delta/Delta)^2.
      const double spread = typicality_spread(row.params.theta);
      const double ratio = row.params.delta / spread;
      const double log_eps_pi = std::log(2.0) - 2.0 * n * ratio * ratio;
      const double log_eps_prep =
          numeric::log_add(std::log(2.0) + 0.5 * log_eps_pi, log_eps_pi);
      row.log_completeness =
          numeric::log_add(log_eps_prep - std::log(2.0), log_hoeffding);
    } else {
      row.log_completeness = log_hoeffding;
    }

    const EntanglementCost cost = entanglement_consumed(schedule, n, diluted);
    row.m = cost.exact;
    row.m_over_n = cost.exact / n;
    row.m_asymptotic = cost.asymptotic;
    row.asymptotic_ratio = cost.ratio;
    rows.push_back(row);
  }
  return rows;
}

SweepMonotonicity check_sweep_monotonicity(const std::vector<SweepRow>& rows) {
  SweepMonotonicity flags;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].m_over_n < rows[i - 1].m_over_n))
      flags.m_over_n_strictly_decreasing = false;
    if (!(rows[i].log_completeness < rows[i - 1].log_completeness))
      flags.completeness_exponent_decreasing = false;
    if (i >= rows.size() / 2 &&
        rows[i].tau_optimized < rows[i - 1].tau_optimized - 1e-12)
      flags.tau_tail_nondecreasing = false;
  }
  return flags;
}

}  // namespace dirng
