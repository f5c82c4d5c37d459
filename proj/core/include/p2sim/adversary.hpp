#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "p2sim/principal.hpp"
#include "p2sim/wire.hpp"

namespace p2sim {

/// What Eve does with one intercepted message. Every transforming action is
/// tied to one message kind; ForwardUnchanged applies everywhere.
enum class AttackerAction {
  ForwardUnchanged,       // transparent proxy step
  SwapKeyDist,            // KeyDist: exchange the two future-bit keys
  RestorePartials,        // PartialShare from the victim: rebuild each partial
                          //   against the original keys recorded earlier
  SwapPartials,           // PartialShare: exchange the two partials
  FlipMessage,            // Sign: replace m by not(m)
  FlipMessageAndForward,  // Forward: replace m by not(m) and pass it along
};

std::string_view action_token(AttackerAction action);  // "swap-keys", ...
AttackerAction action_from_token(std::string_view token);

/// One slot where Eve sees a message: the Nth interception in a scenario,
/// with the message kind and direction that slot carries.
struct InterceptPoint {
  std::size_t ordinal = 0;  // 1-based interception index
  MessageKind kind{};
  bool from_victim = false;  // emitted by the victim (vs addressed to it)
};

/// The five interception slots of a full-interposition scenario, in wire
/// order: the victim's KeyDist, its outgoing PartialShare, the counterpart's
/// PartialShare, the Sign, and the victim's Forward. Structurally the same
/// for either victim.
std::vector<InterceptPoint> victim_intercept_points(Principal victim);

/// Kind and knowledge constraints. RestorePartials needs the original keys,
/// which Eve only ever holds for the victim's own key distribution, so it is
/// applicable only to PartialShares the victim emitted.
bool action_applicable(AttackerAction action, const InterceptPoint& point);

/// Everything Eve has observed so far. Only ever grows.
struct AttackerKnowledge {
  std::optional<std::array<BitString, 2>> original_keys;  // victim's KeyDist, pre-swap
  std::vector<BitString> seen_bits;
  std::vector<PartialKey> seen_partials;

  void absorb(const WireMessage& msg);
  std::size_t size() const noexcept;
};

/// Immutable plan: which action to apply at each interception ordinal.
/// Serializes to one line per slot: "intercept <ordinal> <kind> -> <action>".
class AttackerStrategy {
public:
  struct Entry {
    MessageKind kind{};
    AttackerAction action = AttackerAction::ForwardUnchanged;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  AttackerStrategy() = default;

  void set(std::size_t ordinal, MessageKind kind, AttackerAction action);
  const Entry* find(std::size_t ordinal) const;
  std::size_t size() const noexcept { return entries_.size(); }

  /// Actions in ordinal order.
  std::vector<AttackerAction> actions() const;

  std::string serialize() const;
  /// Parses the text form. Blank lines and lines starting with '#' are
  /// skipped. Kind/action incompatibilities are rejected here, with the
  /// offending 1-based line number.
  static AttackerStrategy parse(std::string_view text);

  friend bool operator==(const AttackerStrategy&, const AttackerStrategy&) = default;

private:
  std::map<std::size_t, Entry> entries_;
};

/// The full interposition attack: swap the victim's keys, restore its
/// outgoing partials, swap the partials headed to it, flip the signed bit on
/// the way in, flip it back on the way out. The action schedule is the same
/// for either victim; the victim choice lives on the scenario.
AttackerStrategy mitm_strategy();

/// Flip the signed bit and touch nothing else. The baseline that fails.
AttackerStrategy naive_flip_strategy();

/// Forward every message unchanged.
AttackerStrategy transparent_proxy_strategy();

/// Applies one action. Records the message contents into the knowledge
/// store first (Eve learns from everything she sees), then transforms. The
/// output keeps the original claimed sender and intended receiver; the true
/// sender becomes Eve. Throws std::invalid_argument when the action does not
/// fit the message kind, std::logic_error when RestorePartials lacks the
/// needed keys.
WireMessage apply_action(AttackerAction action, const WireMessage& msg,
                         AttackerKnowledge& knowledge);

/// Transcript annotation for an applied action, e.g. "swap k_{0B},k_{1B}".
/// Empty for ForwardUnchanged.
std::string action_annotation(AttackerAction action, Principal victim);

}  // namespace p2sim
