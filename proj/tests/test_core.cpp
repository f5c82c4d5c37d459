#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "p2sim/bitstring.hpp"
#include "p2sim/keys.hpp"
#include "p2sim/rng.hpp"
#include "p2sim/verification.hpp"

using namespace p2sim;

namespace {

BitString bits(const std::string& text) { return BitString::from_string(text); }

/// Every bit string of the given length, lowest index varying the leftmost
/// position, for exhaustive sweeps at small lengths.
std::vector<BitString> all_bitstrings(std::size_t length) {
  std::vector<BitString> all;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << length); ++code) {
    BitString b = BitString::zeros(length);
    for (std::size_t i = 0; i < length; ++i)
      b.set_bit(i, static_cast<int>((code >> i) & 1u));
    all.push_back(std::move(b));
  }
  return all;
}

}  // namespace

TEST_CASE("bitstring construction and rendering") {
  CHECK(BitString::zeros(4).str() == "0000");
  CHECK(BitString::ones(3).str() == "111");
  CHECK(bits("1011").str() == "1011");
  CHECK(bits("1011").bit(0) == 1);
  CHECK(bits("1011").bit(1) == 0);
  CHECK(bits("1011").size() == 4);
  CHECK(BitString{}.empty());
  CHECK_THROWS_AS(BitString::from_string("10x1"), std::invalid_argument);
}

TEST_CASE("bit source is deterministic and seed-sensitive") {
  BitSource a(42);
  BitSource b(42);
  for (int i = 0; i < 256; ++i) CHECK(a.next_bit() == b.next_bit());

  BitSource c(42), d(43);
  bool differs = false;
  for (int i = 0; i < 256 && !differs; ++i) differs = c.next_bit() != d.next_bit();
  CHECK(differs);
}

TEST_CASE("mask extracts the forwarded elements") {
  CHECK(mask(bits("1011"), bits("0110")) ==
        PartialKey::from_entries({{1, 0}, {2, 1}}));
  CHECK(mask(bits("10"), bits("00")) == PartialKey{});
  CHECK(mask(bits("10"), bits("11")) == PartialKey::from_entries({{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(mask(bits("10"), bits("101")), std::invalid_argument);
}

TEST_CASE("partial key rendering and validation") {
  CHECK(PartialKey{}.str() == "-");
  CHECK(PartialKey::from_entries({{1, 0}, {2, 1}}).str() == "1:0,2:1");
  CHECK_THROWS_AS(PartialKey::from_entries({{2, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(PartialKey::from_entries({{1, 0}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(PartialKey::from_entries({{0, 2}}), std::invalid_argument);
}

TEST_CASE("verify_full counts positionwise mismatches") {
  CHECK(verify_full(bits("1011"), bits("1011")) == 0);
  CHECK(verify_full(bits("1011"), bits("0100")) == 4);
  CHECK(verify_full(bits("10"), bits("11")) == 1);
  CHECK_THROWS_AS(verify_full(bits("10"), bits("101")), std::invalid_argument);
}

TEST_CASE("verify_partial counts mismatches at recorded positions") {
  CHECK(verify_partial(bits("1011"), PartialKey{}) == 0);
  CHECK(verify_partial(bits("1011"), PartialKey::from_entries({{1, 0}, {2, 1}})) == 0);
  CHECK(verify_partial(bits("1011"), PartialKey::from_entries({{1, 1}})) == 1);
  CHECK_THROWS_AS(verify_partial(bits("10"), PartialKey::from_entries({{2, 1}})),
                  std::invalid_argument);
}

TEST_CASE("swap_future_message_keys is an involution") {
  auto [s0, s1] = swap_future_message_keys(bits("00"), bits("11"));
  CHECK(s0 == bits("11"));
  CHECK(s1 == bits("00"));

  auto [t0, t1] = swap_future_message_keys(bits("10"), bits("10"));
  CHECK(t0 == bits("10"));
  CHECK(t1 == bits("10"));

  auto [u0, u1] = swap_future_message_keys(s0, s1);
  CHECK(u0 == bits("00"));
  CHECK(u1 == bits("11"));
}

TEST_CASE("restore_partial substitutes the original key at each position") {
  CHECK(restore_partial(bits("1011"), PartialKey::from_entries({{1, 1}, {2, 0}})) ==
        PartialKey::from_entries({{1, 0}, {2, 1}}));
  const PartialKey own = mask(bits("1011"), bits("0110"));
  CHECK(restore_partial(bits("1011"), own) == own);
  CHECK_THROWS_AS(restore_partial(bits("10"), PartialKey::from_entries({{2, 1}})),
                  std::invalid_argument);
}

TEST_CASE("mask and restore cohere exhaustively at small lengths") {
  for (std::size_t length = 1; length <= 4; ++length) {
    const auto space = all_bitstrings(length);
    for (const BitString& k : space)
      for (const BitString& k_prime : space)
        for (const BitString& n : space)
          REQUIRE(restore_partial(k, mask(k_prime, n)) == mask(k, n));
  }
}

TEST_CASE("masked elements of a signature never mismatch it") {
  for (std::size_t length = 1; length <= 4; ++length) {
    const auto space = all_bitstrings(length);
    for (const BitString& sig : space)
      for (const BitString& n : space)
        REQUIRE(verify_partial(sig, mask(sig, n)) == 0);
  }
}

TEST_CASE("verify_full is zero exactly on equality and symmetric") {
  const auto space = all_bitstrings(3);
  for (const BitString& a : space)
    for (const BitString& b : space) {
      REQUIRE((verify_full(a, b) == 0) == (a == b));
      REQUIRE(verify_full(a, b) == verify_full(b, a));
    }
}

TEST_CASE("mask commutes with the key swap") {
  const auto space = all_bitstrings(3);
  for (const BitString& k0 : space)
    for (const BitString& k1 : space)
      for (const BitString& n : space) {
        auto [s0, s1] = swap_future_message_keys(k0, k1);
        REQUIRE(mask(s0, n) == mask(k1, n));
        REQUIRE(mask(s1, n) == mask(k0, n));
      }
}

TEST_CASE("key generation is deterministic per seed") {
  const KeyStore a = generate_keys(1, 17);
  const KeyStore b = generate_keys(1, 17);
  CHECK(a.key(0, Principal::Bob) == b.key(0, Principal::Bob));
  CHECK(a.key(1, Principal::Bob) == b.key(1, Principal::Bob));
  CHECK(a.key(0, Principal::Charlie) == b.key(0, Principal::Charlie));
  CHECK(a.key(1, Principal::Charlie) == b.key(1, Principal::Charlie));
  CHECK(a.length() == 1);
  CHECK_THROWS_AS(generate_keys(0, 17), std::invalid_argument);
}

TEST_CASE("distinct seeds give distinct stores almost always") {
  int distinct = 0;
  for (std::uint64_t pair = 0; pair < 1000; ++pair) {
    const KeyStore a = generate_keys(4, 2 * pair);
    const KeyStore b = generate_keys(4, 2 * pair + 1);
    const bool equal = a.key(0, Principal::Bob) == b.key(0, Principal::Bob) &&
                       a.key(1, Principal::Bob) == b.key(1, Principal::Bob) &&
                       a.key(0, Principal::Charlie) == b.key(0, Principal::Charlie) &&
                       a.key(1, Principal::Charlie) == b.key(1, Principal::Charlie);
    if (!equal) ++distinct;
  }
  CHECK(distinct >= 990);
}

TEST_CASE("key store shape is validated") {
  CHECK_THROWS_AS(KeyStore::from_keys(bits("10"), bits("1"), bits("10"), bits("10")),
                  std::invalid_argument);
  const KeyStore store = KeyStore::from_keys(bits("0"), bits("1"), bits("1"), bits("0"));
  CHECK(store.key(0, Principal::Bob) == bits("0"));
  CHECK(store.key(1, Principal::Bob) == bits("1"));
  CHECK(store.key(0, Principal::Charlie) == bits("1"));
  CHECK(store.key(1, Principal::Charlie) == bits("0"));
  CHECK_THROWS_AS(store.key(0, Principal::Alice), std::invalid_argument);
}

TEST_CASE("mismatch fractions parse and floor") {
  CHECK(MismatchFraction::parse("1/4").str() == "1/4");
  CHECK(MismatchFraction::parse("0.25").floor_of(4) == 1);
  CHECK(MismatchFraction::parse("1/4").floor_of(3) == 0);
  CHECK(MismatchFraction::parse("0").floor_of(100) == 0);
  CHECK_THROWS_AS(MismatchFraction::parse("1"), std::invalid_argument);
  CHECK_THROWS_AS(MismatchFraction::parse("5/4"), std::invalid_argument);
  CHECK_THROWS_AS(MismatchFraction::parse("abc"), std::invalid_argument);
}

TEST_CASE("decide applies the policy to both mismatch counts") {
  const VerificationPolicy exact = VerificationPolicy::exact_match();
  CHECK(decide(0, 0, 4, 2, exact) == Decision::Accept);
  CHECK(decide(1, 0, 4, 2, exact) == Decision::Reject);
  CHECK(decide(0, 1, 4, 2, exact) == Decision::Reject);

  const VerificationPolicy quarter =
      VerificationPolicy::threshold(MismatchFraction::parse("0.25"));
  CHECK(decide(1, 0, 4, 4, quarter) == Decision::Accept);
  CHECK(decide(2, 0, 4, 4, quarter) == Decision::Reject);
  CHECK(decide(0, 1, 4, 2, quarter) == Decision::Reject);  // floor(0.25*2) = 0
  CHECK(exact.str() == "exact");
  CHECK(quarter.str() == "threshold:1/4");
}

TEST_CASE("seed mixing separates indices") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t index = 0; index < 1000; ++index)
    seen.insert(mix_seed(5, index));
  CHECK(seen.size() == 1000);
}
