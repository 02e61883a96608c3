#pragma once

#include <string>
#include <vector>

#include "dirng/eat.hpp"
#include "dirng/game.hpp"

namespace dirng {

/// Exponent schedule driving the finite-size parameters to zero:
/// theta = n^(-lambda_theta/16), xi = n^(-lambda_xi), gamma = n^(-lambda_gamma),
/// and, when dilution is active, delta = S(theta) * n^(lambda_c/8).
struct ExponentSchedule {
  double lambda_theta = 0.0;
  double lambda_xi = 0.0;
  double lambda_gamma = 0.0;
  double lambda_c = 0.0;  // 0 disables dilution

  double k() const { return 1.0 - lambda_theta / 8.0; }
  double k_prime() const { return 1.0 - (lambda_theta - lambda_c) / 8.0; }
};

/// Empty when the schedule satisfies every applicable constraint; otherwise
/// one entry per violated inequality, named after it.
std::vector<std::string> validate_schedule(const ExponentSchedule& schedule);

struct ScaledParams {
  double theta = 0.0;
  bool theta_clamped = false;  // true when n is too small and theta hit pi/4
  double xi = 0.0;
  double gamma = 0.0;
  double delta = 0.0;  // dilution slack; 0 when dilution is off
};

/// Concrete protocol and dilution parameters at round count n (n may be as
/// large as ~1e300; everything is evaluated in closed form).
ScaledParams params_for_n(const ExponentSchedule& schedule, double n);

struct EntanglementCost {
  double exact = 0.0;       // n*S(theta), or n*(S+delta) when diluted
  double asymptotic = 0.0;  // (lambda_theta/8) * n^(k or k') * log2(n)
  double ratio = 0.0;       // exact / asymptotic
};

EntanglementCost entanglement_consumed(const ExponentSchedule& schedule,
                                       double n, bool diluted);

struct NoiseFeasibility {
  bool feasible = false;
  double theta_min = 0.0;  // smallest theta with kappa(theta) theta^-4 sqrt(zeta) < 1
};

/// Root-find the smallest usable angle for devices with winning-probability
/// deficit zeta; scales as zeta^(1/8) for small zeta. Infeasible when even
/// theta = pi/4 cannot satisfy the bound.
NoiseFeasibility noise_feasible_theta(double zeta);

struct SweepRow {
  double n = 0.0;
  ScaledParams params;
  double nu = 0.0;
  double tau_closed = 0.0;
  double tau_optimized = 0.0;
  double hmin_per_n = 0.0;          // certificate headline / n
  double log_completeness = 0.0;    // natural log of the completeness bound
  double m = 0.0;                   // ebits or singlets consumed
  double m_over_n = 0.0;
  double m_asymptotic = 0.0;
  double asymptotic_ratio = 0.0;
};

/// One row per n: scheduled parameters, certificate rates, completeness in
/// log-domain and entanglement cost. eps_s and eps_prime stay constant along
/// the schedule.
std::vector<SweepRow> sweep(const ExponentSchedule& schedule,
                            const std::vector<double>& n_grid, bool diluted,
                            double eps_s, double eps_prime);

struct SweepMonotonicity {
  bool m_over_n_strictly_decreasing = true;
  bool completeness_exponent_decreasing = true;
  bool tau_tail_nondecreasing = true;  // over the second half of the grid
};

SweepMonotonicity check_sweep_monotonicity(const std::vector<SweepRow>& rows);

}  // namespace dirng
