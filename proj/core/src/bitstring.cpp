#include "p2sim/bitstring.hpp"

#include <stdexcept>

namespace p2sim {

BitString BitString::zeros(std::size_t length) {
  BitString b;
  b.bits_.assign(length, 0);
  return b;
}

BitString BitString::ones(std::size_t length) {
  BitString b;
  b.bits_.assign(length, 1);
  return b;
}

BitString BitString::random(std::size_t length, BitSource& source) {
  BitString b;
  b.bits_.resize(length);
  for (std::size_t i = 0; i < length; ++i)
    b.bits_[i] = static_cast<std::uint8_t>(source.next_bit());
  return b;
}

BitString BitString::from_string(std::string_view text) {
  BitString b;
  b.bits_.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("bit string may contain only 0 and 1");
    b.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return b;
}

int BitString::bit(std::size_t position) const {
  if (position >= bits_.size())
    throw std::invalid_argument("bit position out of range");
  return bits_[position];
}

void BitString::set_bit(std::size_t position, int value) {
  if (position >= bits_.size())
    throw std::invalid_argument("bit position out of range");
  if (value != 0 && value != 1)
    throw std::invalid_argument("bit value must be 0 or 1");
  bits_[position] = static_cast<std::uint8_t>(value);
}

std::string BitString::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

PartialKey PartialKey::from_entries(std::vector<Entry> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].bit != 0 && entries[i].bit != 1)
      throw std::invalid_argument("partial key bit must be 0 or 1");
    if (i > 0 && entries[i].position <= entries[i - 1].position)
      throw std::invalid_argument("partial key positions must be strictly increasing");
  }
  PartialKey p;
  p.entries_ = std::move(entries);
  return p;
}

std::string PartialKey::str() const {
  if (entries_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(entries_[i].position);
    out.push_back(':');
    out.push_back(static_cast<char>('0' + entries_[i].bit));
  }
  return out;
}

PartialKey mask(const BitString& key, const BitString& mask_vector) {
  if (key.size() != mask_vector.size())
    throw std::invalid_argument("mask length must equal key length");
  std::vector<PartialKey::Entry> entries;
  for (std::size_t i = 0; i < key.size(); ++i)
    if (mask_vector.bit(i) == 1) entries.push_back({i, key.bit(i)});
  return PartialKey::from_entries(std::move(entries));
}

std::size_t verify_full(const BitString& sig, const BitString& stored_key) {
  if (sig.size() != stored_key.size())
    throw std::invalid_argument("signature length must equal key length");
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < sig.size(); ++i)
    if (sig.bit(i) != stored_key.bit(i)) ++mismatches;
  return mismatches;
}

std::size_t verify_partial(const BitString& sig, const PartialKey& partial) {
  std::size_t mismatches = 0;
  for (const auto& entry : partial.entries()) {
    if (entry.position >= sig.size())
      throw std::invalid_argument("partial key position outside signature");
    if (sig.bit(entry.position) != entry.bit) ++mismatches;
  }
  return mismatches;
}

PartialKey restore_partial(const BitString& original_key, const PartialKey& partial) {
  std::vector<PartialKey::Entry> entries;
  entries.reserve(partial.size());
  for (const auto& entry : partial.entries()) {
    if (entry.position >= original_key.size())
      throw std::invalid_argument("partial key position outside original key");
    entries.push_back({entry.position, original_key.bit(entry.position)});
  }
  return PartialKey::from_entries(std::move(entries));
}

}  // namespace p2sim
