#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rsc {

// A bit string with explicit length. Length is part of the value: "0" and
// "00" are different strings even though they denote the same number.
// Bit 0 is the leftmost (most significant) written bit.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length) : bits_(length, false) {}

  static BitString zeros(std::size_t n) { return BitString(n); }

  static BitString from_string(std::string_view s) {
    BitString out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        out.bits_[i] = true;
      } else if (s[i] != '0') {
        throw std::invalid_argument("BitString: expected only '0'/'1', got '" +
                                    std::string(s) + "'");
      }
    }
    return out;
  }

  std::size_t length() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }

  bool bit(std::size_t i) const {
    if (i >= bits_.size()) throw std::out_of_range("BitString::bit: index past length");
    return bits_[i];
  }

  // Two-sorted membership X(t): false past the end instead of an error.
  bool test(std::size_t i) const { return i < bits_.size() && bits_[i]; }

  void set_bit(std::size_t i, bool v) {
    if (i >= bits_.size()) throw std::out_of_range("BitString::set_bit: index past length");
    bits_[i] = v;
  }

  void append(bool b) { bits_.push_back(b); }

  BitString concat(const BitString& rhs) const {
    BitString out = *this;
    out.bits_.insert(out.bits_.end(), rhs.bits_.begin(), rhs.bits_.end());
    return out;
  }

  BitString substr(std::size_t pos, std::size_t len) const {
    if (pos + len > bits_.size()) throw std::out_of_range("BitString::substr");
    BitString out(len);
    for (std::size_t i = 0; i < len; ++i) out.bits_[i] = bits_[pos + i];
    return out;
  }

  std::size_t popcount() const {
    std::size_t c = 0;
    for (bool b : bits_) c += b ? 1 : 0;
    return c;
  }

  std::string to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) s[i] = '1';
    return s;
  }

  bool operator==(const BitString&) const = default;
  auto operator<=>(const BitString&) const = default;

 private:
  std::vector<bool> bits_;
};

}  // namespace rsc
