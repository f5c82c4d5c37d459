#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "p2sim/bitstring.hpp"
#include "p2sim/keys.hpp"
#include "p2sim/principal.hpp"

namespace p2sim {

enum class MessageKind { KeyDist, PartialShare, Sign, Forward };

std::string_view kind_token(MessageKind kind);        // "keydist", ...
MessageKind kind_from_token(std::string_view token);  // throws on unknown token

struct KeyDistPayload {
  BitString key0, key1;
  friend bool operator==(const KeyDistPayload&, const KeyDistPayload&) = default;
};

struct PartialSharePayload {
  PartialKey part0, part1;
  friend bool operator==(const PartialSharePayload&, const PartialSharePayload&) = default;
};

/// One message on the wire. claimed_sender equals true_sender for honest
/// emissions; they differ exactly when Eve impersonates someone.
struct WireMessage {
  MessageKind kind{};
  Principal claimed_sender{};
  Principal true_sender{};
  Principal intended_receiver{};
  std::variant<KeyDistPayload, PartialSharePayload, SignedMessage> payload;

  static WireMessage key_dist(Principal from, Principal to, BitString k0, BitString k1);
  static WireMessage partial_share(Principal from, Principal to, PartialKey p0, PartialKey p1);
  static WireMessage sign(Principal from, Principal to, SignedMessage sm);
  static WireMessage forward(Principal from, Principal to, SignedMessage sm);

  // Checked payload accessors; throw std::logic_error on a kind mismatch.
  const KeyDistPayload& key_dist() const;
  const PartialSharePayload& partial_share() const;
  const SignedMessage& signed_message() const;  // Sign and Forward

  bool spoofed() const { return claimed_sender != true_sender; }

  /// KeyDist "k0,k1"; PartialShare "p0;p1"; Sign/Forward "m,sig_b,sig_c".
  std::string payload_str() const;

  friend bool operator==(const WireMessage&, const WireMessage&) = default;
};

}  // namespace p2sim
