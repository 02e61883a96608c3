#pragma once

#include "dirng/game.hpp"

namespace dirng {

/// Constant 8 + 61*sqrt(2) of the simplified guessing-probability bound.
double simplified_bound_constant();

/// Tighter numeric constant obtained by maximizing the full bound factor
/// over theta; see max_long_bound_factor().
struct FactorMaximum {
  double theta_star = 0.0;
  double value = 0.0;
};

/// Full closed-form bound on 2*deltabar + delta_a: sqrt(2 i_q) * sqrt(eps)
/// times the exact bracketed function of theta. Throws for theta outside
/// (0, pi/4] or eps < 0.
double long_bound(double theta, double epsilon);

/// Crude upper bound (8 + 61 sqrt(2)) * sqrt(eps) / sin^4(2 theta); always
/// dominates long_bound.
double simplified_bound(double theta, double epsilon);

/// sup over theta in (0, pi/4] of sin^4(2 theta) * long_bound / sqrt(eps);
/// evaluates to about 45.13 (dense grid plus golden-section refinement).
FactorMaximum max_long_bound_factor(int grid_points = 10000);

/// Guessing-probability bound min(1, 1/2 + sqrt(8+2 beta) * C * theta^-4 *
/// sqrt(omega_q - omega)) with C = 8 + 61 sqrt(2) by default; the tighter
/// numeric constant may be passed instead. Requires omega <= omega_q.
double pguess_bound(const GameSpec& spec, double omega);
double pguess_bound(const GameSpec& spec, double omega, double constant);

/// Single-round min-entropy bound g(omega) = 1 - kappa theta^-4 *
/// sqrt(omega_q - omega). Returned raw (possibly negative): the tangent
/// construction needs the affine extension, so clamping is the caller's job.
double g_bound(const GameSpec& spec, double omega);

}  // namespace dirng
