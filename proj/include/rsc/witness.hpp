#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "rsc/bitstring.hpp"
#include "rsc/encoding.hpp"

namespace rsc {

// Counting trace: entries[z] for z in [0,x]. For numones it is the running
// count of 1-bits (unit steps); for modcount the same reduced mod m, so
// steps can wrap.
struct CountTrace {
  Nat x = 0;
  std::vector<Nat> entries;
};

// entries[z] = number of 1-bits among X(0..z-1), for z <= x.
inline CountTrace numones(Nat x, const BitString& bits) {
  CountTrace t;
  t.x = x;
  t.entries.reserve(static_cast<std::size_t>(x) + 1);
  Nat count = 0;
  t.entries.push_back(0);
  for (Nat z = 0; z < x; ++z) {
    if (bits.test(static_cast<std::size_t>(z))) ++count;
    t.entries.push_back(count);
  }
  return t;
}

// entries[z] = number of 1-bits among X(0..z-1) mod m. Requires m >= 2.
inline CountTrace modcount(Nat m, Nat x, const BitString& bits) {
  if (m < 2) throw std::invalid_argument("modcount: modulus must be at least 2");
  CountTrace t;
  t.x = x;
  t.entries.reserve(static_cast<std::size_t>(x) + 1);
  Nat count = 0;
  t.entries.push_back(0);
  for (Nat z = 0; z < x; ++z) {
    if (bits.test(static_cast<std::size_t>(z))) count = (count + 1) % m;
    t.entries.push_back(count);
  }
  return t;
}

enum class MonotoneKind { And, Or };

// Balanced monotone sentence value: nodes 1..2a-1 of a complete binary tree,
// node x has children 2x and 2x+1, leaves x+a carry input bit I(x). Returns
// the full bottom-up evaluation table. Requires a to be a power of two and
// |I| = a.
inline std::map<Nat, bool> mfv(Nat a, const std::map<Nat, MonotoneKind>& kinds,
                               const BitString& inputs) {
  if (a == 0 || (a & (a - 1)) != 0)
    throw std::invalid_argument("mfv: tree size must be a power of two");
  if (inputs.length() != a) throw std::invalid_argument("mfv: leaf count mismatch");
  for (Nat x = 1; x < a; ++x)
    if (!kinds.count(x)) throw std::invalid_argument("mfv: missing internal node kind");

  std::map<Nat, bool> y;
  for (Nat x = 0; x < a; ++x) y[x + a] = inputs.bit(static_cast<std::size_t>(x));
  for (Nat x = a; x-- > 1;) {
    bool l = y.at(2 * x);
    bool r = y.at(2 * x + 1);
    y[x] = kinds.at(x) == MonotoneKind::And ? (l && r) : (l || r);
  }
  return y;
}

}  // namespace rsc
