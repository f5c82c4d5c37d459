#include "p2sim/wire.hpp"

#include <stdexcept>

namespace p2sim {

std::string_view kind_token(MessageKind kind) {
  switch (kind) {
    case MessageKind::KeyDist: return "keydist";
    case MessageKind::PartialShare: return "partialshare";
    case MessageKind::Sign: return "sign";
    case MessageKind::Forward: return "forward";
  }
  throw std::invalid_argument("unknown message kind");
}

MessageKind kind_from_token(std::string_view token) {
  if (token == "keydist") return MessageKind::KeyDist;
  if (token == "partialshare") return MessageKind::PartialShare;
  if (token == "sign") return MessageKind::Sign;
  if (token == "forward") return MessageKind::Forward;
  throw std::invalid_argument("unknown message kind token: " + std::string(token));
}

WireMessage WireMessage::key_dist(Principal from, Principal to, BitString k0,
                                  BitString k1) {
  return WireMessage{MessageKind::KeyDist, from, from, to,
                     KeyDistPayload{std::move(k0), std::move(k1)}};
}

WireMessage WireMessage::partial_share(Principal from, Principal to, PartialKey p0,
                                       PartialKey p1) {
  return WireMessage{MessageKind::PartialShare, from, from, to,
                     PartialSharePayload{std::move(p0), std::move(p1)}};
}

WireMessage WireMessage::sign(Principal from, Principal to, SignedMessage sm) {
  return WireMessage{MessageKind::Sign, from, from, to, std::move(sm)};
}

WireMessage WireMessage::forward(Principal from, Principal to, SignedMessage sm) {
  return WireMessage{MessageKind::Forward, from, from, to, std::move(sm)};
}

const KeyDistPayload& WireMessage::key_dist() const {
  if (kind != MessageKind::KeyDist)
    throw std::logic_error("message carries no key distribution payload");
  return std::get<KeyDistPayload>(payload);
}

const PartialSharePayload& WireMessage::partial_share() const {
  if (kind != MessageKind::PartialShare)
    throw std::logic_error("message carries no partial share payload");
  return std::get<PartialSharePayload>(payload);
}

const SignedMessage& WireMessage::signed_message() const {
  if (kind != MessageKind::Sign && kind != MessageKind::Forward)
    throw std::logic_error("message carries no signed message payload");
  return std::get<SignedMessage>(payload);
}

std::string WireMessage::payload_str() const {
  switch (kind) {
    case MessageKind::KeyDist: {
      const auto& kd = key_dist();
      return kd.key0.str() + "," + kd.key1.str();
    }
    case MessageKind::PartialShare: {
      const auto& ps = partial_share();
      return ps.part0.str() + ";" + ps.part1.str();
    }
    case MessageKind::Sign:
    case MessageKind::Forward: {
      const auto& sm = signed_message();
      return std::to_string(sm.message) + "," + sm.sig_b.str() + "," + sm.sig_c.str();
    }
  }
  throw std::logic_error("unknown message kind");
}

}  // namespace p2sim
