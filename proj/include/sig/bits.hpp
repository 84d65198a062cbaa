#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace sig {

/// Fixed-length sequence of bits, one byte of storage per bit.
///
/// Hex conversion is MSB-first per nibble: "a" is {1,0,1,0}.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length, bool value = false);
  BitString(std::initializer_list<int> bits);

  static BitString from_hex(std::string_view hex);
  /// Accepts a string of '0'/'1' characters.
  static BitString from_binary(std::string_view binary);

  /// Requires size() to be a multiple of 4.
  std::string to_hex() const;
  std::string to_binary() const;

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }
  bool at(std::size_t i) const;
  void set(std::size_t i, bool value) { bits_.at(i) = value ? 1 : 0; }
  void push_back(bool value) { bits_.push_back(value ? 1 : 0); }

  std::size_t count_ones() const noexcept;
  std::size_t count_zeros() const noexcept { return size() - count_ones(); }

  /// Requires equal lengths.
  BitString& operator^=(const BitString& other);

  friend auto operator<=>(const BitString&, const BitString&) = default;
  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

BitString operator^(BitString lhs, const BitString& rhs);

}  // namespace sig
