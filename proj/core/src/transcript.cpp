#include "p2sim/transcript.hpp"

namespace p2sim {

namespace {

std::string display(Principal actual, Principal nominal) {
  std::string out(1, letter(actual));
  if (actual != nominal) {
    out.push_back('(');
    out.push_back(letter(nominal));
    out.push_back(')');
  }
  return out;
}

}  // namespace

std::string DeliveryRecord::sender_display() const {
  return display(true_sender, claimed_sender);
}

std::string DeliveryRecord::receiver_display() const {
  return display(receiver, message.intended_receiver);
}

std::string DeliveryRecord::line() const {
  std::string out = std::to_string(step);
  out += ". ";
  out += sender_display();
  out += " -> ";
  out += receiver_display();
  out += " : ";
  out += message.payload_str();
  if (!annotation.empty()) {
    out += " [";
    out += annotation;
    out += "]";
  }
  return out;
}

std::string Transcript::render() const {
  std::string out;
  for (const auto& record : records) {
    out += record.line();
    out.push_back('\n');
  }
  return out;
}

}  // namespace p2sim
