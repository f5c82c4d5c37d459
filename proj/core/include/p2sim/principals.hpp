#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "p2sim/keys.hpp"
#include "p2sim/principal.hpp"
#include "p2sim/verification.hpp"
#include "p2sim/wire.hpp"

namespace p2sim {

/// One verifier's verdict for one protocol instance.
struct Outcome {
  Principal principal{};
  Decision decision = Decision::Reject;
  std::optional<int> accepted_message;  // present iff decision == Accept
  std::size_t full_mismatches = 0;
  std::size_t partial_mismatches = 0;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

enum class AlicePhase { Fresh, Distributed, Signed };

/// The signer. One key distribution and one signature per instance;
/// calls outside that order raise PhaseError.
class Alice {
public:
  explicit Alice(KeyStore store);

  AlicePhase phase() const noexcept { return phase_; }
  const KeyStore& store() const noexcept { return store_; }

  /// Emits the two key-distribution messages: (to Bob, to Charlie).
  std::pair<WireMessage, WireMessage> distribute();

  /// Emits Sign{message, k(message,Bob), k(message,Charlie)} to destination.
  WireMessage sign(int message, Principal destination);

private:
  KeyStore store_;
  AlicePhase phase_ = AlicePhase::Fresh;
};

enum class VerifierPhase { AwaitKeys, AwaitPartials, Ready, Decided };

/// A verifier (Bob or Charlie). Everything it decides depends only on the
/// messages it was sent plus its own sampled masks.
class Verifier {
public:
  explicit Verifier(Principal role);  // Bob or Charlie

  Principal role() const noexcept { return role_; }
  VerifierPhase phase() const noexcept { return phase_; }

  /// Stores own keys, fixes the two mask vectors, and emits the partial
  /// keys for the counterpart: PartialShare{mask(k0,n0), mask(k1,n1)}.
  /// The complement (the kept elements) is recorded per future bit.
  WireMessage receive_keys(const WireMessage& keydist, BitString mask0, BitString mask1);
  /// Same, with both masks sampled from the source: n0 first, then n1,
  /// one bit per position in order.
  WireMessage receive_keys(const WireMessage& keydist, BitSource& mask_source);
  WireMessage receive_keys(const WireMessage& keydist, std::uint64_t mask_seed);

  /// Stores the counterpart's partial keys, keyed by future message bit.
  void receive_partials(const WireMessage& share);

  struct CheckResult {
    Outcome outcome;
    /// Present when the incoming message was a Sign and the decision allows
    /// forwarding: the same SignedMessage, addressed to the counterpart.
    std::optional<WireMessage> forward;
  };

  /// Checks a Sign or Forward: own component in full against the stored own
  /// key for the received bit, counterpart component against the stored
  /// counterpart partial for that bit.
  CheckResult check(const WireMessage& message, const VerificationPolicy& policy,
                    bool forward_on_reject = false);

  const BitString& own_key(int future_bit) const;
  const BitString& chosen_mask(int future_bit) const;
  const PartialKey& kept_elements(int future_bit) const;
  const PartialKey& counterpart_partial(int future_bit) const;

private:
  Principal role_;
  VerifierPhase phase_ = VerifierPhase::AwaitKeys;
  std::array<BitString, 2> own_keys_;
  std::array<BitString, 2> masks_;
  std::array<PartialKey, 2> kept_;
  std::array<PartialKey, 2> counterpart_partials_;
};

}  // namespace p2sim
