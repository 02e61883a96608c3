#include "dirng/rng.hpp"

namespace dirng {
namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 finalizer; full avalanche on 64 bits.
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

std::uint64_t CounterRng::word(Stream stream, std::uint64_t index,
                               std::uint64_t draw) const {
  std::uint64_t z = seed_;
  z = mix64(z + kGolden * (static_cast<std::uint64_t>(stream) + 1));
  z = mix64(z ^ (index + kGolden));
  z = mix64(z ^ (draw + 0x2545f4914f6cdd1dULL));
  return z;
}

double CounterRng::uniform(Stream stream, std::uint64_t index,
                           std::uint64_t draw) const {
  return static_cast<double>(word(stream, index, draw) >> 11) * 0x1.0p-53;
}

CounterRng CounterRng::derive(Stream stream, std::uint64_t index) const {
  return CounterRng(word(stream, index, 0x6a09e667f3bcc908ULL));
}

}  // namespace dirng
