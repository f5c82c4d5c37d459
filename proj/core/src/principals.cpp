#include "p2sim/principals.hpp"

#include <stdexcept>

#include "p2sim/errors.hpp"

namespace p2sim {

Alice::Alice(KeyStore store) : store_(std::move(store)) {
  if (store_.length() == 0)
    throw std::invalid_argument("signer needs keys of length at least 1");
}

std::pair<WireMessage, WireMessage> Alice::distribute() {
  if (phase_ != AlicePhase::Fresh)
    throw PhaseError("keys were already distributed");
  phase_ = AlicePhase::Distributed;
  WireMessage to_bob =
      WireMessage::key_dist(Principal::Alice, Principal::Bob,
                            store_.key(0, Principal::Bob), store_.key(1, Principal::Bob));
  WireMessage to_charlie = WireMessage::key_dist(
      Principal::Alice, Principal::Charlie, store_.key(0, Principal::Charlie),
      store_.key(1, Principal::Charlie));
  return {std::move(to_bob), std::move(to_charlie)};
}

WireMessage Alice::sign(int message, Principal destination) {
  if (message != 0 && message != 1)
    throw std::invalid_argument("message bit must be 0 or 1");
  if (!is_verifier(destination))
    throw std::invalid_argument("signature destination must be Bob or Charlie");
  if (phase_ == AlicePhase::Fresh)
    throw PhaseError("cannot sign before distributing keys");
  if (phase_ == AlicePhase::Signed)
    throw PhaseError("the one-time keys were already used to sign");
  phase_ = AlicePhase::Signed;
  return WireMessage::sign(Principal::Alice, destination,
                           SignedMessage{message, store_.key(message, Principal::Bob),
                                         store_.key(message, Principal::Charlie)});
}

Verifier::Verifier(Principal role) : role_(role) {
  if (!is_verifier(role))
    throw std::invalid_argument("verifier role must be Bob or Charlie");
}

WireMessage Verifier::receive_keys(const WireMessage& keydist, BitString mask0,
                                   BitString mask1) {
  if (phase_ != VerifierPhase::AwaitKeys)
    throw PhaseError("keys were already received");
  if (keydist.kind != MessageKind::KeyDist)
    throw std::invalid_argument("expected a key distribution message");
  const auto& kd = keydist.key_dist();
  if (kd.key0.size() != kd.key1.size() || kd.key0.empty())
    throw std::invalid_argument("key distribution must carry two equal-length keys");
  if (mask0.size() != kd.key0.size() || mask1.size() != kd.key0.size())
    throw std::invalid_argument("mask length must equal key length");

  own_keys_[0] = kd.key0;
  own_keys_[1] = kd.key1;
  masks_[0] = std::move(mask0);
  masks_[1] = std::move(mask1);

  // Complement bookkeeping: the elements this verifier keeps for itself.
  for (int f = 0; f < 2; ++f) {
    std::vector<PartialKey::Entry> kept;
    for (std::size_t i = 0; i < own_keys_[f].size(); ++i)
      if (masks_[f].bit(i) == 0) kept.push_back({i, own_keys_[f].bit(i)});
    kept_[f] = PartialKey::from_entries(std::move(kept));
  }

  phase_ = VerifierPhase::AwaitPartials;
  return WireMessage::partial_share(role_, counterpart(role_),
                                    mask(own_keys_[0], masks_[0]),
                                    mask(own_keys_[1], masks_[1]));
}

WireMessage Verifier::receive_keys(const WireMessage& keydist, BitSource& mask_source) {
  if (keydist.kind != MessageKind::KeyDist)
    throw std::invalid_argument("expected a key distribution message");
  const std::size_t length = keydist.key_dist().key0.size();
  BitString n0 = BitString::random(length, mask_source);
  BitString n1 = BitString::random(length, mask_source);
  return receive_keys(keydist, std::move(n0), std::move(n1));
}

WireMessage Verifier::receive_keys(const WireMessage& keydist, std::uint64_t mask_seed) {
  BitSource source(mask_seed);
  return receive_keys(keydist, source);
}

void Verifier::receive_partials(const WireMessage& share) {
  if (phase_ != VerifierPhase::AwaitPartials)
    throw PhaseError(phase_ == VerifierPhase::AwaitKeys
                         ? "partial keys arrived before the keys"
                         : "partial keys were already received");
  const auto& ps = share.partial_share();
  counterpart_partials_[0] = ps.part0;
  counterpart_partials_[1] = ps.part1;
  phase_ = VerifierPhase::Ready;
}

Verifier::CheckResult Verifier::check(const WireMessage& message,
                                      const VerificationPolicy& policy,
                                      bool forward_on_reject) {
  if (phase_ != VerifierPhase::Ready)
    throw PhaseError(phase_ == VerifierPhase::Decided
                         ? "this verifier already decided"
                         : "cannot verify before keys and partials arrived");
  const SignedMessage& sm = message.signed_message();
  if (sm.message != 0 && sm.message != 1)
    throw std::invalid_argument("message bit must be 0 or 1");

  const BitString& own_sig = (role_ == Principal::Bob) ? sm.sig_b : sm.sig_c;
  const BitString& counterpart_sig = (role_ == Principal::Bob) ? sm.sig_c : sm.sig_b;

  const std::size_t full = verify_full(own_sig, own_keys_[sm.message]);
  const PartialKey& partial = counterpart_partials_[sm.message];
  const std::size_t partial_mismatches = verify_partial(counterpart_sig, partial);

  const Decision decision = decide(full, partial_mismatches, own_keys_[0].size(),
                                   partial.size(), policy);
  phase_ = VerifierPhase::Decided;

  CheckResult result;
  result.outcome.principal = role_;
  result.outcome.decision = decision;
  if (decision == Decision::Accept) result.outcome.accepted_message = sm.message;
  result.outcome.full_mismatches = full;
  result.outcome.partial_mismatches = partial_mismatches;

  // Only the first signature recipient relays; whoever gets the relayed copy
  // receives a Forward and stops the chain.
  if (message.kind == MessageKind::Sign &&
      (decision == Decision::Accept || forward_on_reject))
    result.forward = WireMessage::forward(role_, counterpart(role_), sm);
  return result;
}

const BitString& Verifier::own_key(int future_bit) const {
  if (future_bit != 0 && future_bit != 1)
    throw std::invalid_argument("future message bit must be 0 or 1");
  if (phase_ == VerifierPhase::AwaitKeys) throw PhaseError("no keys received yet");
  return own_keys_[future_bit];
}

const BitString& Verifier::chosen_mask(int future_bit) const {
  if (future_bit != 0 && future_bit != 1)
    throw std::invalid_argument("future message bit must be 0 or 1");
  if (phase_ == VerifierPhase::AwaitKeys) throw PhaseError("no masks chosen yet");
  return masks_[future_bit];
}

const PartialKey& Verifier::kept_elements(int future_bit) const {
  if (future_bit != 0 && future_bit != 1)
    throw std::invalid_argument("future message bit must be 0 or 1");
  if (phase_ == VerifierPhase::AwaitKeys) throw PhaseError("no keys received yet");
  return kept_[future_bit];
}

const PartialKey& Verifier::counterpart_partial(int future_bit) const {
  if (future_bit != 0 && future_bit != 1)
    throw std::invalid_argument("future message bit must be 0 or 1");
  if (phase_ == VerifierPhase::AwaitKeys || phase_ == VerifierPhase::AwaitPartials)
    throw PhaseError("no counterpart partials received yet");
  return counterpart_partials_[future_bit];
}

}  // namespace p2sim
