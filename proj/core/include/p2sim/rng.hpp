#pragma once

#include <cstdint>
#include <random>

namespace p2sim {

/// Derives an independent sub-seed from a master seed (splitmix64 step).
/// Used wherever one user-facing seed has to drive several independent
/// random choices (key generation, each verifier's masks, per-trial seeds).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Deterministic bit stream. One engine draw per bit: wasteful, but the
/// seed-to-bits mapping is trivial to reproduce in tests and stays identical
/// across platforms (no distribution adapters involved).
class BitSource {
public:
  explicit BitSource(std::uint64_t seed) : engine_(seed) {}

  int next_bit() { return static_cast<int>(engine_() & 1u); }
  std::uint64_t next_word() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

}  // namespace p2sim
