#pragma once

#include <cstdint>

#include "dirng/protocol.hpp"

namespace dirng {

/// Entropy of entanglement S(theta) = h2(sin^2 theta) in ebits.
double entanglement_entropy(double theta);

/// Delta = -log2 tan^2 theta, the per-symbol log-likelihood spread between
/// the two source letters. Zero exactly at theta = pi/4.
double typicality_spread(double theta);

/// Projection error eps_pi = 2 exp(-2 n delta^2 / Delta^2). At theta = pi/4
/// every string is typical, so the value is 0 by convention.
double epsilon_pi(double theta, double n, double delta);

/// Preparation error 2 sqrt(eps_pi) + eps_pi.
double epsilon_prep(double eps_pi);

/// Singlets consumed by dilution: ceil((S(theta) + delta) * n). Products that
/// land within 1e-12 of an integer are treated as that integer before the
/// ceiling is applied.
std::uint64_t singlet_count(double theta, std::uint64_t n, double delta);

/// Dilution parameters with all derived quantities filled in.
struct DilutionSpec {
  double theta = 0.0;
  std::uint64_t n = 0;
  double delta = 0.0;
  double entropy = 0.0;      // S(theta)
  double spread = 0.0;       // Delta
  std::uint64_t singlets = 0;  // m
  double eps_pi = 0.0;
  double eps_prep = 0.0;
};

DilutionSpec make_dilution_spec(double theta, std::uint64_t n, double delta);

/// The delta-typical subset of n-bit strings, resolved to its exact band of
/// ones-counts. Probability weights and cardinalities are exact log-domain
/// Hamming-weight sums, polynomial in n.
struct TypicalSetSummary {
  std::int64_t lo = 0;  // smallest typical ones-count
  std::int64_t hi = 0;  // largest typical ones-count
  bool empty = false;
  double cardinality_log2 = 0.0;     // log2 of the number of typical strings
  double probability = 0.0;          // exact typical weight
  double atypical_log_weight = 0.0;  // ln of the exact atypical weight
};

TypicalSetSummary typical_set(double theta, std::uint64_t n, double delta);

/// Exact trace distance between psi_theta^(x)n and the output of the
/// compress-teleport-decompress channel, modeling the atypical branch as a
/// substitution by the typical basis state closest to the mean ones-count
/// (ties to the smaller count). The difference operator has rank at most 3,
/// so the norm follows from a 3x3 eigenproblem in the span of the original
/// state, the projected state, and the substitute.
double exact_dilution_distance(double theta, std::uint64_t n, double delta);

/// Completeness error of dilution followed by the protocol:
/// eps_prep / 2 + exp(-2 n (gamma xi)^2).
double dilution_completeness(const ProtocolParams& params,
                             const DilutionSpec& dspec);

}  // namespace dirng
