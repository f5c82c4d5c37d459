#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "p2sim/principal.hpp"
#include "p2sim/wire.hpp"

namespace p2sim {

/// One delivery. Line grammar:
///
///   <step>. <sender> -> <receiver> : <payload>[ [<annotation>]]
///
/// where <sender> shows "E(X)" when Eve delivers claiming to be X, and
/// <receiver> shows "E(X)" when Eve picks up a message addressed to X.
/// Annotations are non-empty only on attacker transformations.
struct DeliveryRecord {
  std::size_t step = 0;  // dense from 1
  Principal true_sender{};
  Principal claimed_sender{};
  Principal receiver{};   // who actually got the message
  WireMessage message;    // carries the intended receiver and payload
  std::string annotation;

  std::string sender_display() const;
  std::string receiver_display() const;
  std::string line() const;
};

struct Transcript {
  std::vector<DeliveryRecord> records;

  /// One '\n'-terminated line per delivery. Byte-stable across runs.
  std::string render() const;
};

}  // namespace p2sim
