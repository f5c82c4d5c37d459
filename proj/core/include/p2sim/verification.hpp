#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace p2sim {

/// Exact rational in [0, 1), kept as numerator/denominator so that
/// floor(fraction * n) never picks up floating-point error.
struct MismatchFraction {
  unsigned numerator = 0;
  unsigned denominator = 1;

  /// Accepts "0", "0.25", or "1/4". Must land strictly below 1.
  static MismatchFraction parse(std::string_view text);

  std::size_t floor_of(std::size_t n) const;  // floor(fraction * n)
  std::string str() const;                    // "1/4"

  friend bool operator==(const MismatchFraction&, const MismatchFraction&) = default;
};

enum class Decision { Accept, Reject };

struct VerificationPolicy {
  enum class Mode { ExactMatch, Threshold };

  Mode mode = Mode::ExactMatch;
  MismatchFraction max_mismatch{};  // Threshold mode only

  static VerificationPolicy exact_match();
  static VerificationPolicy threshold(MismatchFraction fraction);

  std::string str() const;  // "exact" | "threshold:1/4"

  friend bool operator==(const VerificationPolicy&, const VerificationPolicy&) = default;
};

/// ExactMatch: accept iff both mismatch counts are zero.
/// Threshold: accept iff full_mismatches <= floor(f * key_length) and
/// partial_mismatches <= floor(f * partial_size), where partial_size is the
/// number of entries the partial actually carries.
Decision decide(std::size_t full_mismatches, std::size_t partial_mismatches,
                std::size_t key_length, std::size_t partial_size,
                const VerificationPolicy& policy);

}  // namespace p2sim
