#include "p2sim/verification.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace p2sim {

MismatchFraction MismatchFraction::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty fraction");

  auto parse_number = [](std::string_view s) -> unsigned long {
    if (s.empty()) throw std::invalid_argument("malformed fraction");
    for (char c : s)
      if (c < '0' || c > '9') throw std::invalid_argument("malformed fraction");
    return std::stoul(std::string(s));
  };

  unsigned long num = 0;
  unsigned long den = 1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = parse_number(text.substr(0, slash));
    den = parse_number(text.substr(slash + 1));
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const unsigned long whole = parse_number(text.substr(0, dot));
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 9)
      throw std::invalid_argument("malformed fraction");
    den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    num = whole * den + parse_number(frac);
  } else {
    num = parse_number(text);
  }

  if (den == 0) throw std::invalid_argument("fraction denominator must be nonzero");
  if (num >= den) throw std::invalid_argument("mismatch fraction must be below 1");
  const unsigned long divisor = std::gcd(num, den);
  return MismatchFraction{static_cast<unsigned>(num / divisor),
                          static_cast<unsigned>(den / divisor)};
}

std::size_t MismatchFraction::floor_of(std::size_t n) const {
  if (denominator == 0) throw std::invalid_argument("fraction denominator must be nonzero");
  return static_cast<std::size_t>(
      (static_cast<unsigned long long>(numerator) * n) / denominator);
}

std::string MismatchFraction::str() const {
  return std::to_string(numerator) + "/" + std::to_string(denominator);
}

VerificationPolicy VerificationPolicy::exact_match() { return VerificationPolicy{}; }

VerificationPolicy VerificationPolicy::threshold(MismatchFraction fraction) {
  if (fraction.denominator == 0 || fraction.numerator >= fraction.denominator)
    throw std::invalid_argument("threshold fraction must lie in [0, 1)");
  return VerificationPolicy{Mode::Threshold, fraction};
}

std::string VerificationPolicy::str() const {
  if (mode == Mode::ExactMatch) return "exact";
  return "threshold:" + max_mismatch.str();
}

Decision decide(std::size_t full_mismatches, std::size_t partial_mismatches,
                std::size_t key_length, std::size_t partial_size,
                const VerificationPolicy& policy) {
  if (policy.mode == VerificationPolicy::Mode::ExactMatch)
    return (full_mismatches == 0 && partial_mismatches == 0) ? Decision::Accept
                                                             : Decision::Reject;
  const bool full_ok = full_mismatches <= policy.max_mismatch.floor_of(key_length);
  const bool partial_ok =
      partial_mismatches <= policy.max_mismatch.floor_of(partial_size);
  return (full_ok && partial_ok) ? Decision::Accept : Decision::Reject;
}

}  // namespace p2sim
