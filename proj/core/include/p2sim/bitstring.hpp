#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "p2sim/rng.hpp"

namespace p2sim {

/// Fixed-length sequence of bits. Position 0 is the leftmost element in
/// every textual rendering ("1011" has bit 1 at position 0).
class BitString {
public:
  BitString() = default;

  static BitString zeros(std::size_t length);
  static BitString ones(std::size_t length);
  static BitString random(std::size_t length, BitSource& source);
  /// Parses "1011". Throws std::invalid_argument on characters outside 0/1.
  static BitString from_string(std::string_view text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  int bit(std::size_t position) const;
  void set_bit(std::size_t position, int value);

  std::string str() const;

  friend bool operator==(const BitString&, const BitString&) = default;

private:
  std::vector<std::uint8_t> bits_;
};

/// The forwarded subset of a key: (position, bit) pairs with strictly
/// increasing positions. Renders as "1:0,2:1", or "-" when empty.
class PartialKey {
public:
  struct Entry {
    std::size_t position;
    int bit;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  PartialKey() = default;
  /// Validates strict position ordering and bit values.
  static PartialKey from_entries(std::vector<Entry> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  std::string str() const;

  friend bool operator==(const PartialKey&, const PartialKey&) = default;

private:
  std::vector<Entry> entries_;
};

/// Entries (i, key[i]) for every position where mask_vector[i] = 1.
/// Mask bit 1 means "forward this element to the counterpart"; bit 0 means
/// the verifier keeps it. Lengths must match.
PartialKey mask(const BitString& key, const BitString& mask_vector);

/// Number of positions where sig and stored_key differ. Lengths must match.
std::size_t verify_full(const BitString& sig, const BitString& stored_key);

/// Number of partial entries whose bit disagrees with sig at that position.
/// Every entry position must be inside sig.
std::size_t verify_partial(const BitString& sig, const PartialKey& partial);

/// Same positions as partial, bits taken from original_key instead. The
/// partial's positions reveal exactly which elements were forwarded, so a
/// holder of the original key can rebuild the partial that key would have
/// produced under the same mask: restore(k, mask(k', n)) == mask(k, n).
PartialKey restore_partial(const BitString& original_key, const PartialKey& partial);

}  // namespace p2sim
