#pragma once

#include <cstdint>

namespace dirng {

/// Purpose tags for independent random streams. Draws tagged with different
/// streams never share counter space, so changing how one stream is consumed
/// (e.g. a gamma sweep that flips rounds between test and generation) leaves
/// the others untouched.
enum class Stream : std::uint64_t {
  kTestFlag = 1,   // per-round Bernoulli(gamma) flag
  kSetting = 2,    // per-round game input pair
  kOutcome = 3,    // per-round measurement outcome
  kTrialSeed = 4,  // derivation of per-trial master seeds
  kGeneric = 5,    // miscellaneous draws (tests, parameter sampling)
};

/// Stateless counter-based generator. Every word is a pure function of
/// (seed, stream, index, draw), so parallel and serial evaluation of the
/// same rounds produce bit-identical results in any order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// 64 uniformly mixed bits for the given counter coordinates.
  std::uint64_t word(Stream stream, std::uint64_t index,
                     std::uint64_t draw = 0) const;

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform(Stream stream, std::uint64_t index,
                 std::uint64_t draw = 0) const;

  /// Independent sub-generator, e.g. one per Monte Carlo trial.
  CounterRng derive(Stream stream, std::uint64_t index) const;

 private:
  std::uint64_t seed_;
};

}  // namespace dirng
