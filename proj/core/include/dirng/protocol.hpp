#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "dirng/devices.hpp"
#include "dirng/game.hpp"

namespace dirng {

struct ProtocolParams {
  std::uint64_t n = 0;       // number of rounds
  double gamma = 0.0;        // expected test-round fraction, in (0, 1]
  double xi = 0.0;           // threshold slack, in (0, omega_q - omega_c)
  double eps_s = 0.0;        // smoothing parameter, in (0, 1)
  double eps_prime = 0.0;    // success-probability cutoff, in (0, 1)
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument when a parameter leaves its interval or the
/// threshold omega_q - xi does not clear the classical maximum.
void validate_params(const ProtocolParams& params, const GameSpec& spec);

struct RoundRecord {
  std::uint8_t t, x, y, a, b;
  std::int8_t c;  // -1 encodes the unset score of a generation round
};

struct Transcript {
  std::uint64_t n = 0;
  std::uint64_t wins = 0;   // rounds with c = 1
  std::uint64_t tests = 0;  // rounds with t = 1
  double threshold = 0.0;   // n * gamma * (omega_q - xi), unrounded
  bool success = false;     // wins >= threshold
  bool full_records = false;
  std::vector<RoundRecord> rounds;  // populated only when full_records
};

/// Per-round storage is kept up to this many rounds; larger runs keep
/// counters only.
inline constexpr std::uint64_t kTranscriptStorageLimit = 10'000'000;

/// Execute the n rounds: each round is a test round with probability gamma,
/// drawing its setting from the game input distribution and scoring the
/// predicate; otherwise a generation round at (x,y) = (1,0). Per-round
/// randomness is counter-based, so any thread count yields the same
/// transcript.
Transcript run_protocol(const DeviceModel& dev, const GameSpec& spec,
                        const ProtocolParams& params, unsigned threads = 1);

/// Hoeffding bound exp(-2 n (gamma xi)^2) on the probability that ideal
/// devices fail the threshold test.
double completeness_error(const ProtocolParams& params);

/// Noisy-device variant exp(-2 n gamma^2 (xi - zeta)^2) for devices whose
/// winning probability is omega_q - zeta. Requires 0 <= zeta < xi.
double completeness_error_noisy(const ProtocolParams& params, double zeta);

/// Fraction of aborted runs over independently seeded trials.
double empirical_completeness(const DeviceModel& dev, const GameSpec& spec,
                              const ProtocolParams& params,
                              std::uint64_t trials, unsigned threads = 1);

/// One row per round, columns t,x,y,a,b,c; c is empty for generation rounds.
void write_transcript_csv(const Transcript& transcript, std::ostream& out);

/// Summary with wins, tests, threshold, success, params and seed.
std::string transcript_summary_json(const Transcript& transcript,
                                    const GameSpec& spec,
                                    const ProtocolParams& params);

}  // namespace dirng
