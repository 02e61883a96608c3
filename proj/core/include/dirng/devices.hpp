#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>
#include <string>

#include "dirng/game.hpp"
#include "dirng/rng.hpp"

namespace dirng {

struct BlochVector {
  double x = 0.0, y = 0.0, z = 1.0;
  double norm() const;
};

/// A pair of two-qubit measurement devices: a shared state on A (x) B, two
/// +-1-valued observables per side given as Bloch vectors, and a white-noise
/// visibility. For y = 2 Bob ignores his system and outputs the constant 0
/// (his answer is never scored on that setting).
struct DeviceModel {
  Eigen::Matrix4cd state = Eigen::Matrix4cd::Zero();  // noiseless base state
  std::array<BlochVector, 2> alice{};
  std::array<BlochVector, 2> bob{};
  double visibility = 1.0;

  /// visibility * state + (1 - visibility) * I/4; what measurements see.
  Eigen::Matrix4cd effective_state() const;
};

struct RoundOutcome {
  int a = 0;
  int b = 0;
};

/// Joint outcome probabilities for one setting, in outcome order
/// (a,b) = (0,0), (0,1), (1,0), (1,1).
struct OutcomeDistribution {
  std::array<double, 4> p{};
  double prob(int a, int b) const { return p[2 * a + b]; }
};

/// The optimal device pair for the game of angle theta: the partially
/// entangled state cos(theta)|00> + sin(theta)|11>, Alice measuring Z and X,
/// Bob measuring (Z +- tan(mu) X)/sqrt(1+tan^2(mu)) with tan(mu) = sin(2 theta).
DeviceModel reference_device(double theta);

/// Device that deterministically answers a = b = 0 (classical optimum).
DeviceModel deterministic_zero_device();

/// Born-rule outcome distribution for setting (x, y).
OutcomeDistribution outcome_distribution(const DeviceModel& dev, int x, int y);

/// Full conditional table p(a,b|x,y) over all settings including y = 2.
ConditionalTable conditional_table(const DeviceModel& dev);

/// Exact winning probability of the device in the given game.
double winning_probability(const DeviceModel& dev, const GameSpec& spec);

/// Mix the state with white noise: state <- v * state + (1-v) * I/4.
DeviceModel apply_white_noise(const DeviceModel& dev, double v);

/// Draw one outcome using the round's counter-based randomness.
RoundOutcome sample_round(const DeviceModel& dev, int x, int y,
                          const CounterRng& rng, std::uint64_t round_index);

/// Outcome from a precomputed distribution and one uniform; shared by
/// sample_round and the protocol loop so both walk the same CDF.
RoundOutcome sample_from(const OutcomeDistribution& dist, double u);

/// Throws std::runtime_error when any model invariant fails: unit trace,
/// positive semidefiniteness, unit Bloch vectors, normalized outcome
/// distributions.
void validate_device(const DeviceModel& dev);

/// JSON round trip for device descriptions (state entries, Bloch vectors,
/// visibility, and the y = 2 convention flag).
std::string device_to_json(const DeviceModel& dev);
DeviceModel device_from_json(const std::string& text);

}  // namespace dirng
