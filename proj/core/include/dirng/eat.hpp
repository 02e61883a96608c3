#pragma once

#include <string>

#include "dirng/game.hpp"
#include "dirng/protocol.hpp"

namespace dirng {

/// Certificate parameters decoupled from the protocol runner so that rate
/// evaluations can use symbolic round counts (n up to ~1e300) that no
/// simulation would ever execute.
struct CertificateParams {
  double n = 0.0;
  double gamma = 0.0;
  double xi = 0.0;
  double eps_s = 0.0;
  double eps_prime = 0.0;
};

/// Smooth min-entropy certificate. The bound is a disjunction: either the
/// protocol succeeds with probability at most eps_prime, or the eps_s-smooth
/// min-entropy of the outputs conditioned on success is at least nu * tau * n.
/// Two rate variants are carried: the closed form evaluated verbatim, and the
/// numerically optimized tangent assembly; they differ only in whether the
/// second-order term is divided by nu, and the headline bound takes the
/// smaller of the two.
struct EntropyCertificate {
  double nu = 0.0;            // generation-round factor 1 - gamma(2+beta)/(4+beta)
  double big_l = 0.0;         // sqrt(1 - 2 log2(eps_s * eps_prime))
  double omega_t_star = 0.0;  // optimal tangency point
  double delta_star = 0.0;    // omega_q - omega_t_star, kept at full precision
                              // (the difference above underflows for tiny theta)
  double mu_at_star = 0.0;    // second-order term at omega_t_star (ceiling form)
  double tau_closed = 0.0;
  double tau_optimized = 0.0;
  double hmin_closed = 0.0;     // nu * tau_closed * n
  double hmin_optimized = 0.0;  // nu * tau_optimized * n
  double hmin_bound = 0.0;      // max(0, min of the two variants)
  bool zero_randomness = false;
  double n = 0.0, gamma = 0.0, xi = 0.0, eps_s = 0.0, eps_prime = 0.0;

  static constexpr const char* kDisjunctionNote =
      "holds unless Pr[success] <= eps_prime";
};

/// sqrt(1 - 2 log2(eps_s * eps_prime)), evaluated through the sum of logs so
/// extreme epsilons cannot underflow the product.
double smoothing_factor(double eps_s, double eps_prime);

/// Min-tradeoff function f_min(p) = nu * g(p1 / gamma) for the test-score
/// distribution with Pr[C = 1] = p1. Requires 0 <= p1 <= gamma <= 1.
double min_tradeoff(const GameSpec& spec, double gamma, double p1);

/// Affine tangent of g at omega_t, evaluated at omega:
/// 1 - kappa theta^-4 (2 omega_q - omega_t - omega) / (2 sqrt(omega_q - omega_t)).
/// Lower-bounds g everywhere since g is convex in omega.
double tangent_g(const GameSpec& spec, double omega_t, double omega);

/// Sup norm of the min-tradeoff gradient,
/// gamma^-1 nu kappa theta^-4 / (2 sqrt(omega_q - omega_t)).
double gradient_norm(const GameSpec& spec, double gamma, double omega_t);

/// Second-order penalty 2 (log2 13 + ceil(gradient_norm)) *
/// sqrt(1 - 2 log2(eps_s eps_prime)).
double mu_term(const GameSpec& spec, double gamma, double omega_t,
               double eps_s, double eps_prime);

/// Feasibility bit of the constant-parameter randomness regime:
/// kappa theta^-4 sqrt(xi) < 1. When it holds, the rate tends to a positive
/// constant and the certified entropy grows linearly in n.
bool corollary_rng_partial_check(const GameSpec& spec, double xi, double gamma);

EntropyCertificate certificate(const GameSpec& spec,
                               const CertificateParams& params);
EntropyCertificate certificate(const GameSpec& spec,
                               const ProtocolParams& params);

/// JSON dump carrying every intermediate of the certificate.
std::string certificate_to_json(const EntropyCertificate& cert);

}  // namespace dirng
