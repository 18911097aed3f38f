#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rsc/bitstring.hpp"

namespace rsc {

using Nat = std::uint64_t;

namespace detail {

inline Nat checked_add(Nat a, Nat b) {
  Nat r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("nat addition overflow");
  return r;
}

inline Nat checked_mul(Nat a, Nat b) {
  Nat r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("nat multiplication overflow");
  return r;
}

}  // namespace detail

// The pairing term (y+z)(y+z+1)+2z.
inline Nat pair(Nat y, Nat z) {
  Nat s = detail::checked_add(y, z);
  Nat p = detail::checked_mul(s, detail::checked_add(s, 1));
  return detail::checked_add(p, detail::checked_mul(2, z));
}

// Inverse of pair; rejects numbers that are not pair values.
inline std::pair<Nat, Nat> unpair(Nat p) {
  // Find s with s(s+1) <= p < (s+1)(s+2), starting from a float estimate.
  Nat s = static_cast<Nat>((std::sqrt(4.0L * static_cast<long double>(p) + 1.0L) - 1.0L) / 2.0L);
  while (s > 0 && detail::checked_mul(s, s + 1) > p) --s;
  while (detail::checked_mul(s + 1, s + 2) <= p) ++s;
  Nat off = p - s * (s + 1);
  if (off % 2 != 0 || off / 2 > s)
    throw std::invalid_argument("unpair: not a pair value");
  Nat z = off / 2;
  return {s - z, z};
}

// log n in the paper's sense: ceil(log2(n+1)). The number of bits in an
// index code for values below n.
inline Nat loglen(Nat a) {
  Nat bits = 0;
  while (a > 0) {
    ++bits;
    a >>= 1;
  }
  return bits;
}

// Row extraction from a two-dimensional bit array: bit i of the result is
// set iff i < |Z| and bit <x,i> of Z is set. The result keeps length |Z|.
inline BitString row(Nat x, const BitString& z) {
  BitString out(z.length());
  for (std::size_t i = 0; i < z.length(); ++i)
    if (z.test(pair(x, i))) out.set_bit(i, true);
  return out;
}

// The x-th element of the number sequence encoded by Z: the least y < |Z|
// with bit <x,y> set, or |Z| if the row is empty.
inline Nat seq_at(Nat x, const BitString& z) {
  for (std::size_t y = 0; y < z.length(); ++y)
    if (z.test(pair(x, y))) return y;
  return z.length();
}

// Big-endian binary of `value` in exactly `width` bits.
inline BitString to_bits(Nat value, std::size_t width) {
  if (width < 64 && (value >> width) != 0)
    throw std::overflow_error("to_bits: value does not fit the width");
  BitString out(width);
  for (std::size_t j = 0; j < width; ++j)
    out.set_bit(j, (value >> (width - 1 - j)) & 1);
  return out;
}

// Canonical code of i for the range [0,n): big-endian binary padded to
// exactly loglen(n) bits. Requires i < n.
inline BitString index_code(Nat i, Nat n) {
  if (i >= n) throw std::out_of_range("index_code: index not below range bound");
  return to_bits(i, static_cast<std::size_t>(loglen(n)));
}

// Big-endian decode; inverse of index_code on its range.
inline Nat index_decode(const BitString& v) {
  if (v.length() > 63) throw std::overflow_error("index_decode: too many bits");
  Nat x = 0;
  for (std::size_t j = 0; j < v.length(); ++j) x = (x << 1) | (v.bit(j) ? 1 : 0);
  return x;
}

// A sequence of numbers packed into one BitString via the pairing function,
// readable with seq_at.
class NumberSeq {
 public:
  NumberSeq() = default;
  explicit NumberSeq(BitString backing) : backing_(std::move(backing)) {}

  static NumberSeq encode(const std::vector<Nat>& entries) {
    Nat max_pos = 0;
    for (std::size_t x = 0; x < entries.size(); ++x) {
      Nat p = pair(x, entries[x]);
      if (p > max_pos) max_pos = p;
    }
    BitString backing(entries.empty() ? 0 : static_cast<std::size_t>(max_pos) + 1);
    for (std::size_t x = 0; x < entries.size(); ++x)
      backing.set_bit(pair(x, entries[x]), true);
    return NumberSeq(std::move(backing));
  }

  Nat at(Nat x) const { return seq_at(x, backing_); }
  const BitString& backing() const { return backing_; }

 private:
  BitString backing_;
};

}  // namespace rsc
