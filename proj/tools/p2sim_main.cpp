/// Command-line driver: run scenarios, search the strategy space, estimate
/// acceptance rates. Exit codes: 0 class-consistent behavior (for search:
/// the known man-in-the-middle strategy was found), 1 class-inconsistent
/// results, 2 usage or input errors, 3 empty search result.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "p2sim/errors.hpp"
#include "p2sim/network.hpp"
#include "p2sim/rng.hpp"
#include "p2sim/search.hpp"

namespace {

using nlohmann::ordered_json;
using namespace p2sim;

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitError = 2;
constexpr int kExitEmptySearch = 3;

std::string fixed8(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.8f", value);
  return buffer;
}

VerificationPolicy parse_policy(const std::string& text) {
  if (text == "exact") return VerificationPolicy::exact_match();
  const std::string prefix = "threshold:";
  if (text.rfind(prefix, 0) == 0)
    return VerificationPolicy::threshold(MismatchFraction::parse(text.substr(prefix.size())));
  throw std::invalid_argument("policy must be 'exact' or 'threshold:<fraction>', got '" +
                              text + "'");
}

std::vector<AttackerAction> parse_alphabet(const std::string& csv) {
  std::vector<AttackerAction> alphabet;
  auto add = [&alphabet](AttackerAction action) {
    for (AttackerAction seen : alphabet)
      if (seen == action) return;
    alphabet.push_back(action);
  };
  std::stringstream stream(csv);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (token.empty()) continue;
    if (token == "flip") {
      // The whole flip family: flip at the signature, flip at the forward.
      add(AttackerAction::FlipMessage);
      add(AttackerAction::FlipMessageAndForward);
    } else {
      add(action_from_token(token));
    }
  }
  if (alphabet.empty()) throw std::invalid_argument("the action alphabet is empty");
  return alphabet;
}

AttackerStrategy load_strategy_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open strategy file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return AttackerStrategy::parse(text.str());
}

std::string letter_str(Principal p) { return std::string(1, letter(p)); }

std::string decision_token(const Outcome* outcome) {
  if (!outcome) return "undecided";
  return outcome->decision == Decision::Accept ? "accept" : "reject";
}

std::string outcome_line(Principal p, const Outcome* outcome) {
  if (!outcome) return letter_str(p) + ": no-decision";
  std::ostringstream line;
  line << letter(p) << ": ";
  if (outcome->decision == Decision::Accept)
    line << "accept m=" << *outcome->accepted_message;
  else
    line << "reject";
  line << " full=" << outcome->full_mismatches
       << " partial=" << outcome->partial_mismatches;
  return line.str();
}

struct RunConfig {
  std::string scenario = "honest";
  std::string strategy_file;
  std::size_t length = 8;
  std::uint64_t seed = 0;
  std::string message = "0";
  std::string policy = "exact";
  std::string output = "text";
  bool forward_on_reject = false;
};

/// True when the outcomes match what the scenario class predicts: honest
/// runs end with both verifiers accepting the signed bit; attacks end with
/// the victim accepting the flipped bit and the counterpart the signed one.
/// Custom strategies predict nothing beyond completing.
bool class_consistent(const std::string& scenario, const ScenarioResult& result) {
  const Outcome* b = result.outcome_for(Principal::Bob);
  const Outcome* c = result.outcome_for(Principal::Charlie);
  auto accepted = [&result](const Outcome* o, bool flipped) {
    return o && o->decision == Decision::Accept &&
           *o->accepted_message == (flipped ? 1 - result.signed_message
                                            : result.signed_message);
  };
  if (scenario == "honest") return accepted(b, false) && accepted(c, false);
  if (scenario == "attack-b") return accepted(b, true) && accepted(c, false);
  if (scenario == "attack-c") return accepted(c, true) && accepted(b, false);
  return true;
}

int cmd_run(const RunConfig& config) {
  Scenario scenario;
  std::optional<Principal> victim;
  if (config.scenario == "honest") {
    scenario = Scenario::honest();
  } else if (config.scenario == "attack-b") {
    scenario = Scenario::attack(Principal::Bob);
  } else if (config.scenario == "attack-c") {
    scenario = Scenario::attack(Principal::Charlie);
  } else {
    if (config.strategy_file.empty())
      throw std::invalid_argument("--scenario custom needs --strategy-file");
    scenario = Scenario::custom(load_strategy_file(config.strategy_file));
  }
  victim = scenario.victim;

  RunOptions options;
  options.policy = parse_policy(config.policy);
  options.forward_on_reject = config.forward_on_reject;

  std::vector<int> messages;
  if (config.message == "both")
    messages = {0, 1};
  else
    messages = {config.message == "1" ? 1 : 0};

  const bool structured = config.output == "structured";
  bool all_consistent = true;
  bool first_block = true;
  for (int message : messages) {
    ProtocolInstance instance;
    instance.length = config.length;
    instance.message = message;
    instance.seeds.key_seed = mix_seed(config.seed, 0);
    instance.seeds.bob_mask_seed = mix_seed(config.seed, 1);
    instance.seeds.charlie_mask_seed = mix_seed(config.seed, 2);

    const ScenarioResult result = run_scenario(scenario, instance, options);
    const bool consistent = class_consistent(config.scenario, result);
    all_consistent = all_consistent && consistent;

    if (structured) {
      ordered_json run_record{{"record", "run"},
                              {"scenario", config.scenario},
                              {"length", config.length},
                              {"seed", config.seed},
                              {"message", message},
                              {"policy", options.policy.str()},
                              {"forward_on_reject", config.forward_on_reject},
                              {"first_recipient", letter_str(scenario.first_recipient)}};
      run_record["victim"] = victim ? ordered_json(letter_str(*victim)) : ordered_json();
      std::cout << run_record.dump() << '\n';
      for (const DeliveryRecord& record : result.transcript.records) {
        ordered_json delivery{{"record", "delivery"},
                              {"step", record.step},
                              {"sender", record.sender_display()},
                              {"true_sender", letter_str(record.true_sender)},
                              {"claimed_sender", letter_str(record.claimed_sender)},
                              {"receiver", record.receiver_display()},
                              {"intended_receiver",
                               letter_str(record.message.intended_receiver)},
                              {"kind", std::string(kind_token(record.message.kind))},
                              {"payload", record.message.payload_str()},
                              {"annotation", record.annotation}};
        std::cout << delivery.dump() << '\n';
      }
      for (Principal p : {Principal::Bob, Principal::Charlie}) {
        const Outcome* outcome = result.outcome_for(p);
        ordered_json record{{"record", "outcome"},
                            {"principal", letter_str(p)},
                            {"decision", decision_token(outcome)}};
        record["message"] = outcome && outcome->accepted_message
                                ? ordered_json(*outcome->accepted_message)
                                : ordered_json();
        record["full_mismatches"] =
            outcome ? ordered_json(outcome->full_mismatches) : ordered_json();
        record["partial_mismatches"] =
            outcome ? ordered_json(outcome->partial_mismatches) : ordered_json();
        std::cout << record.dump() << '\n';
      }
      std::cout << ordered_json{{"record", "verdict"},
                                {"signed_message", message},
                                {"consistent", consistent}}
                       .dump()
                << '\n';
    } else {
      if (!first_block) std::cout << '\n';
      std::cout << result.transcript.render();
      std::cout << outcome_line(Principal::Bob, result.outcome_for(Principal::Bob))
                << '\n';
      std::cout << outcome_line(Principal::Charlie,
                                result.outcome_for(Principal::Charlie))
                << '\n';
    }
    first_block = false;
  }
  return all_consistent ? kExitOk : kExitInconsistent;
}

std::string alphabet_csv(const std::vector<AttackerAction>& alphabet) {
  std::string csv;
  for (AttackerAction action : alphabet) {
    if (!csv.empty()) csv += ',';
    csv += std::string(action_token(action));
  }
  return csv;
}

int cmd_search(const std::string& goal_text, std::size_t length,
               const std::string& alphabet_text, const std::string& policy_text) {
  SecurityGoal goal;
  if (goal_text == "transfer" || goal_text == "transferability-violation")
    goal = SecurityGoal::TransferabilityViolation;
  else if (goal_text == "forgery" || goal_text == "forgery-acceptance")
    goal = SecurityGoal::ForgeryAcceptance;
  else
    throw std::invalid_argument("goal must be 'transfer' or 'forgery', got '" +
                                goal_text + "'");

  const std::vector<AttackerAction> alphabet = parse_alphabet(alphabet_text);
  const VerificationPolicy policy = parse_policy(policy_text);
  const std::size_t strategy_count =
      enumerate_strategies(alphabet, victim_intercept_points(Principal::Bob)).size();
  const std::vector<ViolationReport> reports = search(goal, length, policy, alphabet);

  std::cout << "goal: " << goal_token(goal) << '\n';
  std::cout << "L=" << length << " alphabet: " << alphabet_csv(alphabet) << '\n';
  std::cout << "strategies searched: " << strategy_count << '\n';
  std::cout << "universal violations: " << reports.size() << '\n';
  for (const ViolationReport& report : reports) std::cout << '\n' << report.render();

  if (reports.empty()) return kExitEmptySearch;
  const std::string known = mitm_strategy().serialize();
  for (const ViolationReport& report : reports)
    if (report.strategy.serialize() == known) return kExitOk;
  return kExitInconsistent;
}

int cmd_stats(const std::string& strategy_name, const std::string& strategy_file,
              std::size_t length, std::size_t trials, std::uint64_t seed,
              const std::string& policy_text) {
  AttackerStrategy strategy;
  std::string label = strategy_name;
  if (!strategy_file.empty()) {
    strategy = load_strategy_file(strategy_file);
    label = strategy_file;
  } else if (strategy_name == "mitm") {
    strategy = mitm_strategy();
  } else if (strategy_name == "naive-flip") {
    strategy = naive_flip_strategy();
  } else if (strategy_name == "proxy") {
    strategy = transparent_proxy_strategy();
  } else {
    throw std::invalid_argument(
        "strategy must be 'mitm', 'naive-flip' or 'proxy', got '" + strategy_name +
        "'");
  }

  const Scenario scenario = Scenario::custom(std::move(strategy), Principal::Bob);
  RunOptions options;
  options.policy = parse_policy(policy_text);
  options.record_transcript = false;

  struct Tally {
    std::size_t accept_flipped = 0;
    std::size_t accept_signed = 0;
    std::size_t reject = 0;
    std::size_t undecided = 0;
  };
  Tally victim_tally, counterpart_tally;
  auto count = [](Tally& tally, const Outcome* outcome, int signed_message) {
    if (!outcome)
      ++tally.undecided;
    else if (outcome->decision == Decision::Reject)
      ++tally.reject;
    else if (*outcome->accepted_message == signed_message)
      ++tally.accept_signed;
    else
      ++tally.accept_flipped;
  };

  for (std::size_t trial = 0; trial < trials; ++trial) {
    const ProtocolInstance instance = sampled_instance(length, seed, trial);
    const ScenarioResult result = run_scenario(scenario, instance, options);
    count(victim_tally, result.outcome_for(Principal::Bob), result.signed_message);
    count(counterpart_tally, result.outcome_for(Principal::Charlie),
          result.signed_message);
  }

  std::cout << "strategy: " << label << '\n';
  std::cout << "victim: B  counterpart: C\n";
  std::cout << "L=" << length << " trials=" << trials << " seed=" << seed
            << " policy=" << options.policy.str() << '\n';
  auto row = [trials](const char* name, std::size_t count_value) {
    char buffer[96];
    std::snprintf(buffer, sizeof(buffer), "%-26s %10zu  %s", name, count_value,
                  fixed8(static_cast<double>(count_value) /
                         static_cast<double>(trials))
                      .c_str());
    std::cout << buffer << '\n';
  };
  row("victim_accept_flipped", victim_tally.accept_flipped);
  row("victim_accept_signed", victim_tally.accept_signed);
  row("victim_reject", victim_tally.reject);
  row("victim_undecided", victim_tally.undecided);
  row("counterpart_accept_flipped", counterpart_tally.accept_flipped);
  row("counterpart_accept_signed", counterpart_tally.accept_signed);
  row("counterpart_reject", counterpart_tally.reject);
  row("counterpart_undecided", counterpart_tally.undecided);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deterministic simulator of a classical two-verifier signature "
               "protocol, its man-in-the-middle attack, and an exhaustive "
               "attacker-strategy search"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from an INI/TOML config file");

  RunConfig run_config;
  CLI::App* run = app.add_subcommand("run", "Run one scenario and print the wire "
                                            "transcript and both verdicts");
  run->add_option("--scenario", run_config.scenario,
                  "honest, attack-b, attack-c, or custom")
      ->check(CLI::IsMember({"honest", "attack-b", "attack-c", "custom"}))
      ->capture_default_str();
  run->add_option("--strategy-file", run_config.strategy_file,
                  "Attacker strategy file for --scenario custom (victim B)");
  run->add_option("--L", run_config.length, "Key length")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000000}))
      ->capture_default_str();
  run->add_option("--seed", run_config.seed, "Master seed for keys and masks")
      ->capture_default_str();
  run->add_option("--message", run_config.message, "Message bit to sign: 0, 1, or both")
      ->check(CLI::IsMember({"0", "1", "both"}))
      ->capture_default_str();
  run->add_option("--policy", run_config.policy,
                  "Verification policy: exact or threshold:<fraction>")
      ->capture_default_str();
  run->add_option("--output", run_config.output, "text or structured (JSON Lines)")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  run->add_flag("--forward-on-reject", run_config.forward_on_reject,
                "Relay the signature onward even on Reject");

  std::string goal_text = "transfer";
  std::size_t search_length = 1;
  std::string search_alphabet =
      "forward,swap-keys,restore-partials,swap-partials,flip-message,flip-forward";
  std::string search_policy = "exact";
  CLI::App* search_cmd = app.add_subcommand(
      "search", "Exhaustively test every applicable attacker strategy");
  search_cmd->add_option("--goal", goal_text, "transfer or forgery")
      ->capture_default_str();
  search_cmd->add_option("--L", search_length, "Key length (exhaustive, 1 to 4)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{4}))
      ->capture_default_str();
  search_cmd->add_option("--alphabet", search_alphabet,
                         "Comma-separated action tokens; 'flip' covers both "
                         "flip actions")
      ->capture_default_str();
  search_cmd->add_option("--policy", search_policy,
                         "Verification policy: exact or threshold:<fraction>")
      ->capture_default_str();

  std::string stats_strategy = "mitm";
  std::string stats_strategy_file;
  std::size_t stats_length = 8;
  std::size_t stats_trials = 10000;
  std::uint64_t stats_seed = 0;
  std::string stats_policy = "exact";
  CLI::App* stats = app.add_subcommand(
      "stats", "Estimate acceptance rates over randomly sampled instances");
  stats->add_option("--strategy", stats_strategy, "mitm, naive-flip, or proxy")
      ->capture_default_str();
  stats->add_option("--strategy-file", stats_strategy_file,
                    "Attacker strategy file (overrides --strategy)");
  stats->add_option("--L", stats_length, "Key length")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000000}))
      ->capture_default_str();
  stats->add_option("--trials", stats_trials, "Number of sampled instances")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000000000}))
      ->capture_default_str();
  stats->add_option("--seed", stats_seed, "Master seed for instance sampling")
      ->capture_default_str();
  stats->add_option("--policy", stats_policy,
                    "Verification policy: exact or threshold:<fraction>")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (run->parsed()) return cmd_run(run_config);
    if (search_cmd->parsed())
      return cmd_search(goal_text, search_length, search_alphabet, search_policy);
    return cmd_stats(stats_strategy, stats_strategy_file, stats_length, stats_trials,
                     stats_seed, stats_policy);
  } catch (const StrategyParseError& e) {
    std::cerr << "error: strategy file: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
