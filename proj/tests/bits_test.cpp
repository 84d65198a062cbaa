#include <doctest.h>

#include "sig/bits.hpp"
#include "sig/error.hpp"
#include "sig/rng.hpp"

using sig::BitString;

TEST_CASE("hex conversion is MSB-first per nibble") {
  CHECK(BitString::from_hex("a") == BitString{1, 0, 1, 0});
  CHECK(BitString::from_hex("0F") == BitString{0, 0, 0, 0, 1, 1, 1, 1});
  CHECK(BitString{1, 1, 0, 0, 0, 0, 0, 1}.to_hex() == "c1");
  CHECK_THROWS_AS(BitString::from_hex("xz"), sig::InvalidParameter);;
  CHECK_THROWS_AS((BitString{1, 0, 1}.to_hex()), sig::InvalidParameter);
}

TEST_CASE("hex and binary renderings round-trip random strings") {
  sig::Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto bits = rng.random_bits(4 * (1 + rng.uniform_below(64)));
    CHECK(BitString::from_hex(bits.to_hex()) == bits);
    CHECK(BitString::from_binary(bits.to_binary()) == bits);
  }
}

TEST_CASE("xor requires equal lengths") {
  BitString a{1, 0, 1};
  CHECK((a ^ BitString{1, 1, 0}) == BitString{0, 1, 1});
  CHECK_THROWS_AS((a ^= BitString{1}), sig::InvalidParameter);
  CHECK(a.count_ones() == 2);
  CHECK(a.count_zeros() == 1);
}
