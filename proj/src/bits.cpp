#include "sig/bits.hpp"

#include <algorithm>
#include <stdexcept>

#include "sig/error.hpp"

namespace sig {

BitString::BitString(std::size_t length, bool value) : bits_(length, value ? 1 : 0) {}

BitString::BitString(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw InvalidParameter("bit values must be 0 or 1");
    bits_.push_back(static_cast<std::uint8_t>(b));
  }
}

BitString BitString::from_hex(std::string_view hex) {
  BitString out;
  out.bits_.reserve(hex.size() * 4);
  for (char c : hex) {
    int nibble;
    if (c >= '0' && c <= '9') {
      nibble = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      nibble = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      nibble = c - 'A' + 10;
    } else {
      throw InvalidParameter(std::string("invalid hex character '") + c + "'");
    }
    for (int shift = 3; shift >= 0; --shift) out.bits_.push_back((nibble >> shift) & 1);
  }
  return out;
}

BitString BitString::from_binary(std::string_view binary) {
  BitString out;
  out.bits_.reserve(binary.size());
  for (char c : binary) {
    if (c != '0' && c != '1') {
      throw InvalidParameter(std::string("invalid binary character '") + c + "'");
    }
    out.bits_.push_back(c == '1');
  }
  return out;
}

std::string BitString::to_hex() const {
  if (size() % 4 != 0) throw InvalidParameter("hex rendering needs a multiple of 4 bits");
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(size() / 4);
  for (std::size_t i = 0; i < size(); i += 4) {
    int nibble = (bits_[i] << 3) | (bits_[i + 1] << 2) | (bits_[i + 2] << 1) | bits_[i + 3];
    out.push_back(kDigits[nibble]);
  }
  return out;
}

std::string BitString::to_binary() const {
  std::string out;
  out.reserve(size());
  for (auto b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

bool BitString::at(std::size_t i) const { return bits_.at(i) != 0; }

std::size_t BitString::count_ones() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BitString& BitString::operator^=(const BitString& other) {
  if (other.size() != size()) throw InvalidParameter("xor of bit-strings with different lengths");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
  return *this;
}

BitString operator^(BitString lhs, const BitString& rhs) {
  lhs ^= rhs;
  return lhs;
}

}  // namespace sig
