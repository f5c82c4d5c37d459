#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "p2sim/adversary.hpp"
#include "p2sim/principals.hpp"
#include "p2sim/transcript.hpp"
#include "p2sim/verification.hpp"
#include "p2sim/wire.hpp"

namespace p2sim {

/// Which principal, if any, has every channel cut over to Eve.
struct InterpositionConfig {
  std::optional<Principal> victim;  // nullopt: no interposition

  static InterpositionConfig none();
  static InterpositionConfig full_control(Principal victim);  // Bob or Charlie
};

/// Where a message actually lands. With no interposition, the intended
/// receiver. Under full control of V: Eve's own emissions go where they are
/// addressed; everything sent to V or emitted by V goes to Eve; the rest is
/// untouched.
Principal route(const WireMessage& msg, const InterpositionConfig& config);

struct ScenarioSeeds {
  std::uint64_t key_seed = 0;
  std::uint64_t bob_mask_seed = 1;
  std::uint64_t charlie_mask_seed = 2;
};

/// A concrete protocol instance. Explicit keys and masks win over seeds;
/// the exhaustive drivers fill them in, the CLI leaves them empty.
struct ProtocolInstance {
  std::size_t length = 8;
  int message = 0;
  ScenarioSeeds seeds{};
  std::optional<KeyStore> keys;
  std::optional<std::array<BitString, 2>> bob_masks;      // n0, n1
  std::optional<std::array<BitString, 2>> charlie_masks;  // n0, n1
};

/// Decodes an exhaustive-grid coordinate. Keys come from store_code (k0B,
/// k1B, k0C, k1C at L bits each, lowest bits first), masks from mask_code in
/// the order n0B, n1B, n0C, n1C.
ProtocolInstance instance_from_codes(std::size_t length, std::uint64_t store_code,
                                     std::uint64_t mask_code, int message);

/// Random instance number `index` under a master seed: keys, Bob's masks,
/// Charlie's masks, then the message bit, all from one derived bit stream.
ProtocolInstance sampled_instance(std::size_t length, std::uint64_t seed,
                                  std::uint64_t index);

/// What to run. Attack scenarios interpose on the victim and make it the
/// first signature recipient (the role pattern mirrors between victims);
/// the victim's counterpart sees nothing unusual.
struct Scenario {
  std::optional<Principal> victim;
  std::optional<AttackerStrategy> strategy;
  Principal first_recipient = Principal::Bob;  // who Alice signs to

  static Scenario honest(Principal first_recipient = Principal::Bob);
  static Scenario attack(Principal victim);  // mitm_strategy against the victim
  static Scenario custom(AttackerStrategy strategy, Principal victim = Principal::Bob);
};

struct RunOptions {
  VerificationPolicy policy{};
  bool record_transcript = true;
  bool forward_on_reject = false;
};

struct ScenarioResult {
  Transcript transcript;
  std::vector<Outcome> outcomes;  // in decision order; absent = never decided
  int signed_message = 0;

  const Outcome* outcome_for(Principal p) const;
};

/// Drives one full protocol run in the fixed wire order: key distribution
/// (counterpart first), partial-key exchange (first recipient's share first),
/// then Sign and Forward. Deterministic: identical inputs give identical
/// transcripts, byte for byte. Throws ScenarioError when a custom strategy
/// leaves an interception without an action.
ScenarioResult run_scenario(const Scenario& scenario, const ProtocolInstance& instance,
                            const RunOptions& options = {});

}  // namespace p2sim
