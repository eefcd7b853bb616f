#pragma once

#include <cstdint>

namespace dpc {

// Counter-based generator built on the SplitMix64 finalizer. Every output is
// a pure function of (key, counter), so any sample index can be produced
// without sequential state. That is what makes chunked/parallel draws
// byte-identical to a single sequential draw.

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Root seed plus derivation of independent child streams. Labels identify
// (module, gain-atom, batch-index) so concurrent workers never share a stream.
struct Seed {
  std::uint64_t root = 0;

  constexpr Seed child(std::uint64_t label) const {
    return Seed{mix64(root ^ mix64(label + kGolden))};
  }
};

// Well-known stream labels for the top-level consumers.
namespace seed_tag {
inline constexpr std::uint64_t lemma = 1;
inline constexpr std::uint64_t sweep = 2;
inline constexpr std::uint64_t verify = 3;
inline constexpr std::uint64_t samples = 4;
}  // namespace seed_tag

constexpr std::uint64_t counter_bits(Seed s, std::uint64_t counter) {
  return mix64(s.root + (counter + 1) * kGolden);
}

// Uniform on the open interval (0,1); never returns an exact 0 or 1, so it is
// safe inside log() and inverse CDFs.
inline double counter_open01(Seed s, std::uint64_t counter) {
  return (static_cast<double>(counter_bits(s, counter) >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace dpc
