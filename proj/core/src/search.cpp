#include "p2sim/search.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

namespace p2sim {

std::string_view goal_token(SecurityGoal goal) {
  switch (goal) {
    case SecurityGoal::TransferabilityViolation: return "transferability-violation";
    case SecurityGoal::ForgeryAcceptance: return "forgery-acceptance";
  }
  throw std::invalid_argument("unknown security goal");
}

SecurityGoal goal_from_token(std::string_view token) {
  if (token == "transferability-violation") return SecurityGoal::TransferabilityViolation;
  if (token == "forgery-acceptance") return SecurityGoal::ForgeryAcceptance;
  throw std::invalid_argument("unknown security goal '" + std::string(token) + "'");
}

bool goal_holds(SecurityGoal goal, const ScenarioResult& result) {
  switch (goal) {
    case SecurityGoal::TransferabilityViolation: {
      const Outcome* b = result.outcome_for(Principal::Bob);
      const Outcome* c = result.outcome_for(Principal::Charlie);
      return b && c && b->decision == Decision::Accept &&
             c->decision == Decision::Accept &&
             b->accepted_message != c->accepted_message;
    }
    case SecurityGoal::ForgeryAcceptance: {
      for (const auto& outcome : result.outcomes)
        if (outcome.decision == Decision::Accept &&
            outcome.accepted_message != result.signed_message)
          return true;
      return false;
    }
  }
  throw std::invalid_argument("unknown security goal");
}

InstanceSet InstanceSet::exhaustive(std::size_t length) {
  if (length == 0 || length > 4)
    throw std::invalid_argument("exhaustive instance sets support lengths 1 through 4");
  InstanceSet set;
  set.kind = Kind::Exhaustive;
  set.length = length;
  return set;
}

InstanceSet InstanceSet::sampled(std::size_t length, std::size_t sample_count,
                                 std::uint64_t seed) {
  if (length == 0) throw std::invalid_argument("key length must be at least 1");
  if (sample_count == 0) throw std::invalid_argument("sample count must be at least 1");
  InstanceSet set;
  set.kind = Kind::Sampled;
  set.length = length;
  set.sample_count = sample_count;
  set.seed = seed;
  return set;
}

std::size_t InstanceSet::size() const {
  if (kind == Kind::Sampled) return sample_count;
  // One bit of message, 4 keys and 4 masks of `length` bits each.
  return std::size_t{1} << (8 * length + 1);
}

ProtocolInstance InstanceSet::instance(std::size_t index) const {
  if (index >= size()) throw std::out_of_range("instance index out of range");
  if (kind == Kind::Sampled) return sampled_instance(length, seed, index);
  const int message = static_cast<int>(index & 1u);
  const std::uint64_t mask_code =
      (index >> 1) & ((std::uint64_t{1} << (4 * length)) - 1);
  const std::uint64_t store_code = index >> (1 + 4 * length);
  return instance_from_codes(length, store_code, mask_code, message);
}

std::string ViolationReport::render() const {
  std::ostringstream out;
  out << (universal ? "universal" : "opportunistic") << ' ' << goal_token(goal) << '\n';
  out << "strategy:\n" << strategy.serialize();
  out << "witness: L=" << witness.length << " m=" << witness.message << '\n';
  const KeyStore& store = *witness.keys;
  out << "k_{0B}=" << store.key(0, Principal::Bob).str()
      << " k_{1B}=" << store.key(1, Principal::Bob).str()
      << " k_{0C}=" << store.key(0, Principal::Charlie).str()
      << " k_{1C}=" << store.key(1, Principal::Charlie).str() << '\n';
  out << "n_{0B}=" << (*witness.bob_masks)[0].str()
      << " n_{1B}=" << (*witness.bob_masks)[1].str()
      << " n_{0C}=" << (*witness.charlie_masks)[0].str()
      << " n_{1C}=" << (*witness.charlie_masks)[1].str() << '\n';
  out << "transcript:\n" << transcript.render();
  return out.str();
}

const std::vector<AttackerAction>& full_alphabet() {
  static const std::vector<AttackerAction> alphabet{
      AttackerAction::ForwardUnchanged,   AttackerAction::SwapKeyDist,
      AttackerAction::RestorePartials,    AttackerAction::SwapPartials,
      AttackerAction::FlipMessage,        AttackerAction::FlipMessageAndForward};
  return alphabet;
}

std::vector<AttackerStrategy> enumerate_strategies(
    const std::vector<AttackerAction>& alphabet,
    const std::vector<InterceptPoint>& points) {
  std::vector<std::vector<AttackerAction>> choices(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (AttackerAction action : alphabet)
      if (action_applicable(action, points[i])) choices[i].push_back(action);
    if (choices[i].empty()) return {};
  }

  std::vector<AttackerStrategy> strategies;
  std::vector<std::size_t> odometer(points.size(), 0);
  for (;;) {
    AttackerStrategy strategy;
    for (std::size_t i = 0; i < points.size(); ++i)
      strategy.set(points[i].ordinal, points[i].kind, choices[i][odometer[i]]);
    strategies.push_back(std::move(strategy));

    std::size_t slot = points.size();
    while (slot > 0) {
      --slot;
      if (++odometer[slot] < choices[slot].size()) break;
      odometer[slot] = 0;
      if (slot == 0) return strategies;
    }
  }
}

std::optional<ViolationReport> check_strategy(const AttackerStrategy& strategy,
                                              SecurityGoal goal,
                                              const InstanceSet& instances,
                                              const VerificationPolicy& policy,
                                              Principal victim) {
  const Scenario scenario = Scenario::custom(strategy, victim);
  RunOptions options;
  options.policy = policy;
  options.record_transcript = false;

  std::optional<std::size_t> first_violation;
  bool any_clean = false;
  const std::size_t total = instances.size();
  for (std::size_t index = 0; index < total; ++index) {
    const ScenarioResult result = run_scenario(scenario, instances.instance(index), options);
    if (goal_holds(goal, result)) {
      if (!first_violation) first_violation = index;
    } else {
      any_clean = true;
    }
    if (first_violation && any_clean) break;  // verdict settled either way
  }
  if (!first_violation) return std::nullopt;

  ViolationReport report;
  report.strategy = strategy;
  report.goal = goal;
  report.universal = !any_clean;
  report.witness = instances.instance(*first_violation);
  RunOptions witness_options;
  witness_options.policy = policy;
  report.transcript =
      run_scenario(scenario, report.witness, witness_options).transcript;
  return report;
}

std::vector<ViolationReport> search(SecurityGoal goal, std::size_t length,
                                    const VerificationPolicy& policy,
                                    const std::vector<AttackerAction>& alphabet) {
  const std::vector<InterceptPoint> points = victim_intercept_points(Principal::Bob);
  const InstanceSet instances = InstanceSet::exhaustive(length);
  std::vector<ViolationReport> universal;
  for (const AttackerStrategy& strategy : enumerate_strategies(alphabet, points)) {
    auto report = check_strategy(strategy, goal, instances, policy, Principal::Bob);
    if (report && report->universal) universal.push_back(std::move(*report));
  }
  std::sort(universal.begin(), universal.end(),
            [](const ViolationReport& a, const ViolationReport& b) {
              return a.strategy.serialize() < b.strategy.serialize();
            });
  return universal;
}

}  // namespace p2sim
