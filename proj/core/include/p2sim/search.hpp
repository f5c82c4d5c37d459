#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "p2sim/adversary.hpp"
#include "p2sim/network.hpp"

namespace p2sim {

enum class SecurityGoal {
  /// Both verifiers accept, but different message bits.
  TransferabilityViolation,
  /// Some verifier accepts a bit Alice never signed.
  ForgeryAcceptance,
};

std::string_view goal_token(SecurityGoal goal);  // "transferability-violation", ...
SecurityGoal goal_from_token(std::string_view token);

/// True when the outcomes of one run witness the goal.
bool goal_holds(SecurityGoal goal, const ScenarioResult& result);

/// The instances a strategy is tested against.
struct InstanceSet {
  enum class Kind { Exhaustive, Sampled };

  Kind kind = Kind::Exhaustive;
  std::size_t length = 1;
  std::size_t sample_count = 0;  // Sampled only
  std::uint64_t seed = 0;        // Sampled only

  /// Every key store, every mask assignment, both message bits:
  /// 2^(8L+1) instances. Limited to L <= 4.
  static InstanceSet exhaustive(std::size_t length);
  static InstanceSet sampled(std::size_t length, std::size_t count, std::uint64_t seed);

  std::size_t size() const;
  ProtocolInstance instance(std::size_t index) const;
};

/// A strategy that reached the goal, with the first instance that shows it.
/// universal: the goal held on every tested instance (the strategy needs no
/// luck); otherwise it is opportunistic.
struct ViolationReport {
  AttackerStrategy strategy;
  SecurityGoal goal{};
  bool universal = false;
  ProtocolInstance witness;  // explicit keys and masks; re-runnable
  Transcript transcript;     // of the witness run

  std::string render() const;
};

/// Every assignment of applicable actions to the given interception slots,
/// in deterministic order. Alphabet order is preserved per slot; the last
/// slot varies fastest. Duplicate-free by construction.
std::vector<AttackerStrategy> enumerate_strategies(
    const std::vector<AttackerAction>& alphabet,
    const std::vector<InterceptPoint>& points);

/// Runs the strategy against every instance in the set (in order) with the
/// given victim interposed. Returns nothing when the goal never holds.
/// Stops scanning once both a violating and a non-violating instance are
/// known; the report's witness is re-run with transcript recording, so a
/// report always reproduces.
std::optional<ViolationReport> check_strategy(const AttackerStrategy& strategy,
                                              SecurityGoal goal,
                                              const InstanceSet& instances,
                                              const VerificationPolicy& policy,
                                              Principal victim = Principal::Bob);

/// Exhaustive search at the given length over the applicability-filtered
/// strategy space (victim Bob): returns every strategy whose violation is
/// universal, sorted by serialized form.
std::vector<ViolationReport> search(SecurityGoal goal, std::size_t length,
                                    const VerificationPolicy& policy,
                                    const std::vector<AttackerAction>& alphabet);

/// The full action alphabet in canonical order.
const std::vector<AttackerAction>& full_alphabet();

}  // namespace p2sim
