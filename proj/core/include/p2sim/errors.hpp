#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace p2sim {

/// A state-machine method was invoked in a phase where it is not legal
/// (double distribution, verification before the partials arrived, ...).
class PhaseError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A scenario cannot make progress: some principal awaits a message that
/// nobody will ever send. In practice this means a custom attacker strategy
/// left an intercepted message without an action.
class ScenarioError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Failure while parsing the line-oriented strategy text form.
/// Carries the 1-based line number of the offending line.
class StrategyParseError : public std::runtime_error {
public:
  StrategyParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

}  // namespace p2sim
