#include "p2sim/adversary.hpp"

#include <sstream>
#include <stdexcept>

#include "p2sim/errors.hpp"

namespace p2sim {

std::string_view action_token(AttackerAction action) {
  switch (action) {
    case AttackerAction::ForwardUnchanged: return "forward";
    case AttackerAction::SwapKeyDist: return "swap-keys";
    case AttackerAction::RestorePartials: return "restore-partials";
    case AttackerAction::SwapPartials: return "swap-partials";
    case AttackerAction::FlipMessage: return "flip-message";
    case AttackerAction::FlipMessageAndForward: return "flip-forward";
  }
  throw std::invalid_argument("unknown attacker action");
}

AttackerAction action_from_token(std::string_view token) {
  if (token == "forward") return AttackerAction::ForwardUnchanged;
  if (token == "swap-keys") return AttackerAction::SwapKeyDist;
  if (token == "restore-partials") return AttackerAction::RestorePartials;
  if (token == "swap-partials") return AttackerAction::SwapPartials;
  if (token == "flip-message") return AttackerAction::FlipMessage;
  if (token == "flip-forward") return AttackerAction::FlipMessageAndForward;
  throw std::invalid_argument("unknown attacker action token: " + std::string(token));
}

std::vector<InterceptPoint> victim_intercept_points(Principal victim) {
  if (!is_verifier(victim))
    throw std::invalid_argument("interposition victim must be Bob or Charlie");
  return {
      {1, MessageKind::KeyDist, false},       // the victim's keys arriving
      {2, MessageKind::PartialShare, true},   // the victim's partials going out
      {3, MessageKind::PartialShare, false},  // the counterpart's partials
      {4, MessageKind::Sign, false},          // the signature for the victim
      {5, MessageKind::Forward, true},        // the victim relaying it
  };
}

bool action_applicable(AttackerAction action, const InterceptPoint& point) {
  switch (action) {
    case AttackerAction::ForwardUnchanged:
      return true;
    case AttackerAction::SwapKeyDist:
      return point.kind == MessageKind::KeyDist;
    case AttackerAction::RestorePartials:
      // Eve holds original keys only for the key distribution she cut open,
      // i.e. the victim's; only the victim's own partials can be restored.
      return point.kind == MessageKind::PartialShare && point.from_victim;
    case AttackerAction::SwapPartials:
      return point.kind == MessageKind::PartialShare;
    case AttackerAction::FlipMessage:
      return point.kind == MessageKind::Sign;
    case AttackerAction::FlipMessageAndForward:
      return point.kind == MessageKind::Forward;
  }
  return false;
}

void AttackerKnowledge::absorb(const WireMessage& msg) {
  switch (msg.kind) {
    case MessageKind::KeyDist: {
      const auto& kd = msg.key_dist();
      if (!original_keys) original_keys = {kd.key0, kd.key1};
      seen_bits.push_back(kd.key0);
      seen_bits.push_back(kd.key1);
      break;
    }
    case MessageKind::PartialShare: {
      const auto& ps = msg.partial_share();
      seen_partials.push_back(ps.part0);
      seen_partials.push_back(ps.part1);
      break;
    }
    case MessageKind::Sign:
    case MessageKind::Forward: {
      const auto& sm = msg.signed_message();
      seen_bits.push_back(sm.sig_b);
      seen_bits.push_back(sm.sig_c);
      break;
    }
  }
}

std::size_t AttackerKnowledge::size() const noexcept {
  return seen_bits.size() + seen_partials.size() + (original_keys ? 1 : 0);
}

void AttackerStrategy::set(std::size_t ordinal, MessageKind kind, AttackerAction action) {
  if (ordinal == 0) throw std::invalid_argument("interception ordinals are 1-based");
  entries_[ordinal] = Entry{kind, action};
}

const AttackerStrategy::Entry* AttackerStrategy::find(std::size_t ordinal) const {
  auto it = entries_.find(ordinal);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<AttackerAction> AttackerStrategy::actions() const {
  std::vector<AttackerAction> out;
  out.reserve(entries_.size());
  for (const auto& [ordinal, entry] : entries_) out.push_back(entry.action);
  return out;
}

std::string AttackerStrategy::serialize() const {
  std::string out;
  for (const auto& [ordinal, entry] : entries_) {
    out += "intercept ";
    out += std::to_string(ordinal);
    out.push_back(' ');
    out += kind_token(entry.kind);
    out += " -> ";
    out += action_token(entry.action);
    out.push_back('\n');
  }
  return out;
}

AttackerStrategy AttackerStrategy::parse(std::string_view text) {
  AttackerStrategy strategy;
  std::istringstream stream{std::string(text)};
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(stream, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::istringstream fields(line);
    std::string word;
    if (!(fields >> word)) continue;  // blank line
    if (word.front() == '#') continue;

    if (word != "intercept")
      throw StrategyParseError(line_number, "expected 'intercept', got '" + word + "'");

    std::size_t ordinal = 0;
    if (!(fields >> ordinal) || ordinal == 0)
      throw StrategyParseError(line_number, "expected a positive interception ordinal");

    std::string kind_word, arrow, action_word;
    if (!(fields >> kind_word >> arrow >> action_word) || arrow != "->")
      throw StrategyParseError(line_number,
                               "expected '<kind> -> <action>' after the ordinal");
    if (fields >> word)
      throw StrategyParseError(line_number, "trailing content: '" + word + "'");

    MessageKind kind{};
    AttackerAction action{};
    try {
      kind = kind_from_token(kind_word);
      action = action_from_token(action_word);
    } catch (const std::invalid_argument& e) {
      throw StrategyParseError(line_number, e.what());
    }

    // Direction-independent compatibility; the runner still checks the
    // directional constraint against the live scenario.
    const bool compatible =
        action_applicable(action, InterceptPoint{ordinal, kind, true}) ||
        action_applicable(action, InterceptPoint{ordinal, kind, false});
    if (!compatible)
      throw StrategyParseError(line_number,
                               std::string("action '") + std::string(action_token(action)) +
                                   "' does not apply to '" + std::string(kind_token(kind)) +
                                   "' messages");
    if (strategy.find(ordinal))
      throw StrategyParseError(line_number,
                               "duplicate interception ordinal " + std::to_string(ordinal));
    strategy.set(ordinal, kind, action);
  }
  return strategy;
}

AttackerStrategy mitm_strategy() {
  AttackerStrategy s;
  s.set(1, MessageKind::KeyDist, AttackerAction::SwapKeyDist);
  s.set(2, MessageKind::PartialShare, AttackerAction::RestorePartials);
  s.set(3, MessageKind::PartialShare, AttackerAction::SwapPartials);
  s.set(4, MessageKind::Sign, AttackerAction::FlipMessage);
  s.set(5, MessageKind::Forward, AttackerAction::FlipMessageAndForward);
  return s;
}

AttackerStrategy naive_flip_strategy() {
  AttackerStrategy s;
  s.set(1, MessageKind::KeyDist, AttackerAction::ForwardUnchanged);
  s.set(2, MessageKind::PartialShare, AttackerAction::ForwardUnchanged);
  s.set(3, MessageKind::PartialShare, AttackerAction::ForwardUnchanged);
  s.set(4, MessageKind::Sign, AttackerAction::FlipMessage);
  s.set(5, MessageKind::Forward, AttackerAction::ForwardUnchanged);
  return s;
}

AttackerStrategy transparent_proxy_strategy() {
  AttackerStrategy s;
  s.set(1, MessageKind::KeyDist, AttackerAction::ForwardUnchanged);
  s.set(2, MessageKind::PartialShare, AttackerAction::ForwardUnchanged);
  s.set(3, MessageKind::PartialShare, AttackerAction::ForwardUnchanged);
  s.set(4, MessageKind::Sign, AttackerAction::ForwardUnchanged);
  s.set(5, MessageKind::Forward, AttackerAction::ForwardUnchanged);
  return s;
}

WireMessage apply_action(AttackerAction action, const WireMessage& msg,
                         AttackerKnowledge& knowledge) {
  knowledge.absorb(msg);

  WireMessage out = msg;
  out.true_sender = Principal::Eve;  // claimed sender and destination kept

  auto require_kind = [&](bool ok) {
    if (!ok)
      throw std::invalid_argument(std::string("action '") +
                                  std::string(action_token(action)) +
                                  "' does not apply to '" +
                                  std::string(kind_token(msg.kind)) + "' messages");
  };

  switch (action) {
    case AttackerAction::ForwardUnchanged:
      break;
    case AttackerAction::SwapKeyDist: {
      require_kind(msg.kind == MessageKind::KeyDist);
      const auto& kd = msg.key_dist();
      auto [k0, k1] = swap_future_message_keys(kd.key0, kd.key1);
      out.payload = KeyDistPayload{std::move(k0), std::move(k1)};
      break;
    }
    case AttackerAction::RestorePartials: {
      require_kind(msg.kind == MessageKind::PartialShare);
      if (!knowledge.original_keys)
        throw std::logic_error(
            "restore-partials needs the original keys, which Eve never saw");
      const auto& ps = msg.partial_share();
      out.payload = PartialSharePayload{
          restore_partial((*knowledge.original_keys)[0], ps.part0),
          restore_partial((*knowledge.original_keys)[1], ps.part1)};
      break;
    }
    case AttackerAction::SwapPartials: {
      require_kind(msg.kind == MessageKind::PartialShare);
      const auto& ps = msg.partial_share();
      out.payload = PartialSharePayload{ps.part1, ps.part0};
      break;
    }
    case AttackerAction::FlipMessage:
    case AttackerAction::FlipMessageAndForward: {
      require_kind(action == AttackerAction::FlipMessage
                       ? msg.kind == MessageKind::Sign
                       : msg.kind == MessageKind::Forward);
      SignedMessage sm = msg.signed_message();
      sm.message = 1 - sm.message;
      out.payload = std::move(sm);
      break;
    }
  }
  return out;
}

std::string action_annotation(AttackerAction action, Principal victim) {
  const char v = letter(victim);
  switch (action) {
    case AttackerAction::ForwardUnchanged:
      return "";
    case AttackerAction::SwapKeyDist:
      return std::string("swap k_{0") + v + "},k_{1" + v + "}";
    case AttackerAction::RestorePartials:
      return std::string("restore kpart_{0") + v + "},kpart_{1" + v + "}";
    case AttackerAction::SwapPartials:
      return "swap partial keys";
    case AttackerAction::FlipMessage:
    case AttackerAction::FlipMessageAndForward:
      return "swap m,not(m)";
  }
  throw std::invalid_argument("unknown attacker action");
}

}  // namespace p2sim
