#include "p2sim/keys.hpp"

#include <stdexcept>

namespace p2sim {

namespace {

std::size_t slot(int future_bit, Principal recipient) {
  if (future_bit != 0 && future_bit != 1)
    throw std::invalid_argument("future message bit must be 0 or 1");
  if (recipient != Principal::Bob && recipient != Principal::Charlie)
    throw std::invalid_argument("key recipient must be Bob or Charlie");
  return static_cast<std::size_t>(future_bit) * 2 +
         (recipient == Principal::Charlie ? 1 : 0);
}

}  // namespace

KeyStore KeyStore::from_keys(BitString k0_bob, BitString k1_bob,
                             BitString k0_charlie, BitString k1_charlie) {
  const std::size_t length = k0_bob.size();
  if (length == 0) throw std::invalid_argument("key length must be at least 1");
  if (k1_bob.size() != length || k0_charlie.size() != length ||
      k1_charlie.size() != length)
    throw std::invalid_argument("all four keys must have the same length");
  KeyStore store;
  store.keys_[slot(0, Principal::Bob)] = std::move(k0_bob);
  store.keys_[slot(1, Principal::Bob)] = std::move(k1_bob);
  store.keys_[slot(0, Principal::Charlie)] = std::move(k0_charlie);
  store.keys_[slot(1, Principal::Charlie)] = std::move(k1_charlie);
  return store;
}

const BitString& KeyStore::key(int future_bit, Principal recipient) const {
  return keys_[slot(future_bit, recipient)];
}

std::size_t KeyStore::length() const { return keys_[0].size(); }

KeyStore generate_keys(std::size_t length, std::uint64_t seed) {
  if (length == 0) throw std::invalid_argument("key length must be at least 1");
  BitSource source(seed);
  BitString k0b = BitString::random(length, source);
  BitString k1b = BitString::random(length, source);
  BitString k0c = BitString::random(length, source);
  BitString k1c = BitString::random(length, source);
  return KeyStore::from_keys(std::move(k0b), std::move(k1b), std::move(k0c),
                             std::move(k1c));
}

std::pair<BitString, BitString> swap_future_message_keys(BitString k0, BitString k1) {
  return {std::move(k1), std::move(k0)};
}

}  // namespace p2sim
