#include "p2sim/rng.hpp"

namespace p2sim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed + (index + 1) * 0x9e3779b97f4a7c15ull);
}

}  // namespace p2sim
