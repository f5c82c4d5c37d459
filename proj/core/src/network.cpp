#include "p2sim/network.hpp"

#include <stdexcept>
#include <string>

#include "p2sim/errors.hpp"
#include "p2sim/rng.hpp"

namespace p2sim {

InterpositionConfig InterpositionConfig::none() { return InterpositionConfig{}; }

InterpositionConfig InterpositionConfig::full_control(Principal victim) {
  if (!is_verifier(victim))
    throw std::invalid_argument("interposition victim must be Bob or Charlie");
  return InterpositionConfig{victim};
}

Principal route(const WireMessage& msg, const InterpositionConfig& config) {
  if (!config.victim) return msg.intended_receiver;
  if (msg.true_sender == Principal::Eve) return msg.intended_receiver;
  if (msg.intended_receiver == *config.victim || msg.true_sender == *config.victim)
    return Principal::Eve;
  return msg.intended_receiver;
}

ProtocolInstance instance_from_codes(std::size_t length, std::uint64_t store_code,
                                     std::uint64_t mask_code, int message) {
  if (length == 0 || length > 16)
    throw std::invalid_argument("coded instances support lengths 1 through 16");
  auto decode = [length](std::uint64_t code, unsigned field) {
    BitString bits = BitString::zeros(length);
    for (std::size_t i = 0; i < length; ++i)
      bits.set_bit(i, static_cast<int>((code >> (field * length + i)) & 1u));
    return bits;
  };
  ProtocolInstance instance;
  instance.length = length;
  instance.message = message;
  instance.keys = KeyStore::from_keys(decode(store_code, 0), decode(store_code, 1),
                                      decode(store_code, 2), decode(store_code, 3));
  instance.bob_masks = {decode(mask_code, 0), decode(mask_code, 1)};
  instance.charlie_masks = {decode(mask_code, 2), decode(mask_code, 3)};
  return instance;
}

ProtocolInstance sampled_instance(std::size_t length, std::uint64_t seed,
                                  std::uint64_t index) {
  if (length == 0) throw std::invalid_argument("key length must be at least 1");
  BitSource source(mix_seed(seed, index));
  ProtocolInstance instance;
  instance.length = length;
  BitString k0b = BitString::random(length, source);
  BitString k1b = BitString::random(length, source);
  BitString k0c = BitString::random(length, source);
  BitString k1c = BitString::random(length, source);
  instance.keys = KeyStore::from_keys(std::move(k0b), std::move(k1b), std::move(k0c),
                                      std::move(k1c));
  instance.bob_masks = {BitString::random(length, source),
                        BitString::random(length, source)};
  instance.charlie_masks = {BitString::random(length, source),
                            BitString::random(length, source)};
  instance.message = source.next_bit();
  return instance;
}

Scenario Scenario::honest(Principal first_recipient) {
  if (!is_verifier(first_recipient))
    throw std::invalid_argument("the first signature recipient must be Bob or Charlie");
  Scenario s;
  s.first_recipient = first_recipient;
  return s;
}

Scenario Scenario::attack(Principal victim) {
  Scenario s = custom(mitm_strategy(), victim);
  return s;
}

Scenario Scenario::custom(AttackerStrategy strategy, Principal victim) {
  if (!is_verifier(victim))
    throw std::invalid_argument("interposition victim must be Bob or Charlie");
  Scenario s;
  s.victim = victim;
  s.strategy = std::move(strategy);
  s.first_recipient = victim;
  return s;
}

const Outcome* ScenarioResult::outcome_for(Principal p) const {
  for (const auto& outcome : outcomes)
    if (outcome.principal == p) return &outcome;
  return nullptr;
}

namespace {

/// Eve's side of one run: applies the strategy to interceptions in arrival
/// order and keeps the accumulated knowledge.
class EveSession {
public:
  EveSession(const AttackerStrategy* strategy, Principal victim)
      : strategy_(strategy), victim_(victim) {}

  std::pair<WireMessage, std::string> intercept(const WireMessage& msg) {
    ++count_;
    const AttackerStrategy::Entry* entry = strategy_->find(count_);
    if (!entry)
      throw ScenarioError("interception " + std::to_string(count_) + " (" +
                          std::string(kind_token(msg.kind)) +
                          ") has no action; the message is never delivered and the "
                          "protocol stalls");
    if (entry->kind != msg.kind)
      throw ScenarioError("interception " + std::to_string(count_) + " carries a " +
                          std::string(kind_token(msg.kind)) + " message, but the "
                          "strategy expects " + std::string(kind_token(entry->kind)));
    const InterceptPoint point{count_, msg.kind, msg.true_sender == victim_};
    if (!action_applicable(entry->action, point))
      throw ScenarioError("action '" + std::string(action_token(entry->action)) +
                          "' is not applicable at interception " +
                          std::to_string(count_));
    WireMessage out = apply_action(entry->action, msg, knowledge_);
    return {std::move(out), action_annotation(entry->action, victim_)};
  }

private:
  const AttackerStrategy* strategy_;
  Principal victim_;
  AttackerKnowledge knowledge_;
  std::size_t count_ = 0;
};

}  // namespace

ScenarioResult run_scenario(const Scenario& scenario, const ProtocolInstance& instance,
                            const RunOptions& options) {
  if (instance.length == 0)
    throw std::invalid_argument("protocol length must be at least 1");
  if (instance.message != 0 && instance.message != 1)
    throw std::invalid_argument("message bit must be 0 or 1");
  if (scenario.victim.has_value() != scenario.strategy.has_value())
    throw std::invalid_argument("an interposed scenario needs a victim and a strategy");
  if (instance.keys && instance.keys->length() != instance.length)
    throw std::invalid_argument("explicit keys do not match the instance length");

  const Principal first = scenario.first_recipient;
  const Principal second = counterpart(first);
  const InterpositionConfig net = scenario.victim
                                      ? InterpositionConfig::full_control(*scenario.victim)
                                      : InterpositionConfig::none();

  Alice alice(instance.keys ? *instance.keys
                            : generate_keys(instance.length, instance.seeds.key_seed));
  Verifier bob(Principal::Bob);
  Verifier charlie(Principal::Charlie);
  auto verifier = [&](Principal p) -> Verifier& {
    return p == Principal::Bob ? bob : charlie;
  };

  EveSession eve(scenario.strategy ? &*scenario.strategy : nullptr,
                 scenario.victim.value_or(Principal::Eve));

  ScenarioResult result;
  result.signed_message = instance.message;
  std::size_t step = 0;

  auto record = [&](const WireMessage& msg, Principal actual, std::string annotation) {
    ++step;
    if (options.record_transcript)
      result.transcript.records.push_back(DeliveryRecord{
          step, msg.true_sender, msg.claimed_sender, actual, msg, std::move(annotation)});
  };

  // One logical send. Interposed messages produce two delivery records: the
  // pickup by Eve and her (possibly transformed) emission.
  auto deliver = [&](WireMessage msg) -> WireMessage {
    const Principal actual = route(msg, net);
    record(msg, actual, {});
    if (actual != Principal::Eve) return msg;
    auto [out, annotation] = eve.intercept(msg);
    record(out, route(out, net), std::move(annotation));
    return out;
  };

  auto receive_keys = [&](Verifier& v, const WireMessage& keydist) -> WireMessage {
    const auto& explicit_masks =
        v.role() == Principal::Bob ? instance.bob_masks : instance.charlie_masks;
    if (explicit_masks) {
      if ((*explicit_masks)[0].size() != instance.length ||
          (*explicit_masks)[1].size() != instance.length)
        throw std::invalid_argument("explicit masks do not match the instance length");
      return v.receive_keys(keydist, (*explicit_masks)[0], (*explicit_masks)[1]);
    }
    const std::uint64_t seed = v.role() == Principal::Bob
                                   ? instance.seeds.bob_mask_seed
                                   : instance.seeds.charlie_mask_seed;
    return v.receive_keys(keydist, seed);
  };

  auto [to_bob, to_charlie] = alice.distribute();
  WireMessage& to_first = first == Principal::Bob ? to_bob : to_charlie;
  WireMessage& to_second = second == Principal::Bob ? to_bob : to_charlie;

  // Key distribution: the untouched side first, then the first recipient.
  WireMessage second_share = receive_keys(verifier(second), deliver(to_second));
  WireMessage first_share = receive_keys(verifier(first), deliver(to_first));

  // Partial-key exchange: the first recipient's share travels first.
  verifier(second).receive_partials(deliver(first_share));
  verifier(first).receive_partials(deliver(second_share));

  // Messaging: sign to the first recipient, who may relay onward.
  WireMessage sign_delivery = deliver(alice.sign(instance.message, first));
  Verifier::CheckResult first_check =
      verifier(first).check(sign_delivery, options.policy, options.forward_on_reject);
  result.outcomes.push_back(first_check.outcome);

  if (first_check.forward) {
    WireMessage forward_delivery = deliver(*first_check.forward);
    Verifier::CheckResult second_check = verifier(second).check(
        forward_delivery, options.policy, options.forward_on_reject);
    result.outcomes.push_back(second_check.outcome);
  }
  return result;
}

}  // namespace p2sim
