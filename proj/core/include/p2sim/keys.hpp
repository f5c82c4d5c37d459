#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "p2sim/bitstring.hpp"
#include "p2sim/principal.hpp"

namespace p2sim {

/// Alice's four secret keys, indexed by (future message bit, recipient).
/// All four have the same nonzero length.
class KeyStore {
public:
  KeyStore() = default;

  static KeyStore from_keys(BitString k0_bob, BitString k1_bob,
                            BitString k0_charlie, BitString k1_charlie);

  const BitString& key(int future_bit, Principal recipient) const;
  std::size_t length() const;

  friend bool operator==(const KeyStore&, const KeyStore&) = default;

private:
  std::array<BitString, 4> keys_;  // [future_bit * 2 + (recipient == Charlie)]
};

/// Four uniformly random keys of the given length. Deterministic per seed;
/// generation order is k(0,Bob), k(1,Bob), k(0,Charlie), k(1,Charlie), one
/// bit at a time. length = 0 is rejected.
KeyStore generate_keys(std::size_t length, std::uint64_t seed);

/// A one-bit message together with the two key components that sign it.
struct SignedMessage {
  int message = 0;
  BitString sig_b;  // component the recipient Bob checks in full
  BitString sig_c;  // component the recipient Charlie checks in full

  friend bool operator==(const SignedMessage&, const SignedMessage&) = default;
};

/// Relabels which key is bound to which future message bit.
std::pair<BitString, BitString> swap_future_message_keys(BitString k0, BitString k1);

}  // namespace p2sim
