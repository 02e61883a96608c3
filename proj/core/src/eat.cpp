#include "dirng/eat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dirng/numeric.hpp"
#include "dirng/selftest.hpp"
#include "json.hpp"

namespace dirng {
namespace {

double nu_factor(const GameSpec& spec, double gamma) {
  return 1.0 - gamma * (2.0 + spec.beta) / (4.0 + spec.beta);
}

void check_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma <= 1.0))
    throw std::domain_error("gamma must lie in (0, 1]");
}

void check_epsilons(double eps_s, double eps_prime) {
  if (!(eps_s > 0.0 && eps_s < 1.0) || !(eps_prime > 0.0 && eps_prime < 1.0))
    throw std::domain_error("eps_s and eps_prime must lie in (0, 1)");
}

double tangency_gap_or_throw(const GameSpec& spec, double omega_t) {
  const double gap = spec.omega_q - omega_t;
  if (!(gap > 0.0))
    throw std::domain_error("omega_t must lie strictly below omega_q");
  return gap;
}

}  // namespace

double smoothing_factor(double eps_s, double eps_prime) {
  check_epsilons(eps_s, eps_prime);
  return std::sqrt(1.0 - 2.0 * (std::log2(eps_s) + std::log2(eps_prime)));
}

double min_tradeoff(const GameSpec& spec, double gamma, double p1) {
  check_gamma(gamma);
  if (!(p1 >= 0.0 && p1 <= gamma))
    throw std::domain_error("min_tradeoff: p1 must lie in [0, gamma]");
  return nu_factor(spec, gamma) * g_bound(spec, p1 / gamma);
}

double tangent_g(const GameSpec& spec, double omega_t, double omega) {
  const double gap = tangency_gap_or_throw(spec, omega_t);
  const double t4 = std::pow(spec.theta, 4.0);
  return 1.0 - spec.kappa / t4 * (2.0 * spec.omega_q - omega_t - omega) /
                   (2.0 * std::sqrt(gap));
}

double gradient_norm(const GameSpec& spec, double gamma, double omega_t) {
  check_gamma(gamma);
  const double gap = tangency_gap_or_throw(spec, omega_t);
  const double t4 = std::pow(spec.theta, 4.0);
  return nu_factor(spec, gamma) * spec.kappa /
         (gamma * t4 * 2.0 * std::sqrt(gap));
}

double mu_term(const GameSpec& spec, double gamma, double omega_t,
               double eps_s, double eps_prime) {
  const double grad = gradient_norm(spec, gamma, omega_t);
  return 2.0 * (std::log2(13.0) + std::ceil(grad)) *
         smoothing_factor(eps_s, eps_prime);
}

bool corollary_rng_partial_check(const GameSpec& spec, double xi,
                                 double gamma) {
  check_gamma(gamma);
  if (!(xi > 0.0)) throw std::domain_error("xi must be positive");
  const double t4 = std::pow(spec.theta, 4.0);
  return spec.kappa * std::sqrt(xi) / t4 < 1.0;
}

EntropyCertificate certificate(const GameSpec& spec,
                               const CertificateParams& params) {
  if (!(params.n >= 1.0)) throw std::domain_error("certificate: n must be >= 1");
  check_gamma(params.gamma);
  if (!(params.xi > 0.0)) throw std::domain_error("certificate: xi must be > 0");
  const double L = smoothing_factor(params.eps_s, params.eps_prime);
  const double nu = nu_factor(spec, params.gamma);
  const double sqrt_n = std::sqrt(params.n);
  const double t4 = std::pow(spec.theta, 4.0);
  const double kt4 = spec.kappa / t4;
  const double log2_26 = std::log2(26.0);  // = 1 + log2(13)

  EntropyCertificate cert;
  cert.nu = nu;
  cert.big_l = L;
  cert.n = params.n;
  cert.gamma = params.gamma;
  cert.xi = params.xi;
  cert.eps_s = params.eps_s;
  cert.eps_prime = params.eps_prime;

  // Closed form, evaluated verbatim.
  cert.tau_closed =
      1.0 - kt4 * std::sqrt(params.xi + 2.0 / (params.gamma * sqrt_n) * L) -
      (2.0 * log2_26 / sqrt_n) * L;

  // Tangent assembly: maximize over the tangency deficit delta = omega_q -
  // omega_t the rate [n nu gbar(omega_q - xi) - mu sqrt(n)] / (nu n), with the
  // ceiling in mu relaxed to +1 (a conservative upper bound on mu). The
  // maximizer has the closed form delta = xi + 2 L / (gamma sqrt(n)); the
  // numeric search is seeded there and refined, guarded by the requirement
  // omega_t > omega_c.
  auto objective = [&](double delta) {
    const double sqrt_d = std::sqrt(delta);
    return 1.0 - kt4 * (delta + params.xi) / (2.0 * sqrt_d) -
           2.0 * L * log2_26 / (nu * sqrt_n) -
           kt4 * L / (params.gamma * sqrt_n * sqrt_d);
  };
  const double delta_analytic = params.xi + 2.0 * L / (params.gamma * sqrt_n);
  const double delta_max = classical_quantum_gap(spec);
  double delta_star;
  if (delta_analytic < delta_max) {
    const double lo = delta_analytic / 16.0;
    const double hi = std::min(delta_analytic * 16.0, delta_max);
    const auto log_obj = [&](double t) { return objective(std::exp(t)); };
    const auto found = numeric::golden_section_max(
        log_obj, std::log(lo), std::log(hi), 1e-14);
    delta_star = std::exp(found.x);
    if (objective(delta_analytic) >= found.value) delta_star = delta_analytic;
  } else {
    // Stationary point lies past the allowed tangency window; the objective
    // is increasing there, so the supremum sits at the omega_c edge.
    delta_star = delta_max * (1.0 - 1e-12);
  }
  cert.omega_t_star = spec.omega_q - delta_star;
  cert.delta_star = delta_star;
  cert.tau_optimized = objective(delta_star);
  // mu from the deficit directly; omega_q - delta_star can round back to
  // omega_q when theta (hence delta_star) is extremely small.
  const double grad_at_star = nu * kt4 / (params.gamma * 2.0 * std::sqrt(delta_star));
  cert.mu_at_star = 2.0 * (std::log2(13.0) + std::ceil(grad_at_star)) * L;

  cert.hmin_closed = nu * cert.tau_closed * params.n;
  cert.hmin_optimized = nu * cert.tau_optimized * params.n;
  const double headline = std::min(cert.hmin_closed, cert.hmin_optimized);
  cert.zero_randomness = headline <= 0.0;
  cert.hmin_bound = std::max(0.0, headline);
  return cert;
}

EntropyCertificate certificate(const GameSpec& spec,
                               const ProtocolParams& params) {
  return certificate(spec, CertificateParams{static_cast<double>(params.n),
                                             params.gamma, params.xi,
                                             params.eps_s, params.eps_prime});
}

std::string certificate_to_json(const EntropyCertificate& cert) {
  nlohmann::ordered_json j;
  j["nu"] = cert.nu;
  j["L"] = cert.big_l;
  j["omega_t_star"] = cert.omega_t_star;
  j["delta_star"] = cert.delta_star;
  j["mu_at_star"] = cert.mu_at_star;
  j["tau_closed"] = cert.tau_closed;
  j["tau_optimized"] = cert.tau_optimized;
  j["hmin_closed"] = cert.hmin_closed;
  j["hmin_optimized"] = cert.hmin_optimized;
  j["hmin_bound"] = cert.hmin_bound;
  j["zero_randomness"] = cert.zero_randomness;
  j["n"] = cert.n;
  j["gamma"] = cert.gamma;
  j["xi"] = cert.xi;
  j["eps_s"] = cert.eps_s;
  j["eps_prime"] = cert.eps_prime;
  j["disjunction"] = EntropyCertificate::kDisjunctionNote;
  return j.dump(2);
}

}  // namespace dirng
