#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rsc/bitstring.hpp"
#include "rsc/encoding.hpp"
#include "rsc/graph.hpp"

namespace rsc {

// Partial function {0,1}^n -> {0,1}^n, kept as an explicit table.
struct PartialFn {
  std::size_t width = 0;
  std::map<BitString, BitString> table;

  PartialFn() = default;
  explicit PartialFn(std::size_t n) : width(n) {}

  bool defined(const BitString& x) const { return table.count(x) > 0; }

  const BitString& at(const BitString& x) const {
    auto it = table.find(x);
    if (it == table.end()) throw std::out_of_range("PartialFn::at: point not in domain");
    return it->second;
  }

  void define(const BitString& x, const BitString& v) {
    if (x.length() != width || v.length() != width)
      throw std::invalid_argument("PartialFn::define: key/value width mismatch");
    table[x] = v;
  }

  std::size_t dom_size() const { return table.size(); }
};

// Total function {0,1}^n -> {0,1}^n. Values are indexed by the big-endian
// numeric value of the argument, so totality holds by construction.
struct TotalFn {
  std::size_t width = 0;
  std::vector<BitString> values;  // size 2^width

  TotalFn() = default;
  explicit TotalFn(std::size_t n)
      : width(n), values(std::size_t{1} << n, BitString::zeros(n)) {
    if (n > 24) throw std::invalid_argument("TotalFn: width too large for a table");
  }

  const BitString& at(const BitString& x) const {
    if (x.length() != width) throw std::invalid_argument("TotalFn::at: argument width mismatch");
    return values[index_decode(x)];
  }

  void set(const BitString& x, const BitString& v) {
    if (x.length() != width || v.length() != width)
      throw std::invalid_argument("TotalFn::set: key/value width mismatch");
    values[index_decode(x)] = v;
  }

  bool operator==(const TotalFn&) const = default;
};

// Completes a partial function by sending every undefined point to `fill`.
inline TotalFn complete(const PartialFn& f, const BitString& fill) {
  if (fill.length() != f.width) throw std::invalid_argument("complete: fill width mismatch");
  TotalFn out(f.width);
  for (auto& v : out.values) v = fill;
  for (const auto& [x, v] : f.table) out.set(x, v);
  return out;
}

// Bit-graph lookup: w = x.v with |x| = n, |v| = loglen(n); answers bit i of
// f(x) where i is the big-endian value of v. Undefined when x is outside
// dom f; malformed queries (wrong length, i >= n) are errors.
inline std::optional<bool> bitgraph_lookup(const PartialFn& f, const BitString& w) {
  std::size_t n = f.width;
  std::size_t lg = static_cast<std::size_t>(loglen(n));
  if (w.length() != n + lg)
    throw std::invalid_argument("bitgraph_lookup: malformed query (wrong length)");
  BitString x = w.substr(0, n);
  Nat i = index_decode(w.substr(n, lg));
  if (i >= n) throw std::invalid_argument("bitgraph_lookup: malformed query (bit index past width)");
  if (!f.defined(x)) return std::nullopt;
  return f.at(x).bit(static_cast<std::size_t>(i));
}

// ---------------------------------------------------------------------------
// Oracles: total predicates on bit strings.
// ---------------------------------------------------------------------------

class Oracle {
 public:
  enum class SolverKind { Stconn, OneStconn };

  Oracle() : node_(std::make_shared<Node>(FiniteSupport{})) {}

  static Oracle empty() { return Oracle(); }

  static Oracle finite(std::set<BitString> support) {
    return Oracle(std::make_shared<Node>(FiniteSupport{std::move(support)}));
  }

  // The bit-graph oracle A_f of a total f; true only on strings of length
  // n + loglen(n).
  static Oracle function_backed(TotalFn f) {
    return Oracle(std::make_shared<Node>(FunctionBacked{std::move(f)}));
  }

  static Oracle union_of(std::vector<Oracle> members) {
    return Oracle(std::make_shared<Node>(Union{std::move(members)}));
  }

  static Oracle section_of(std::size_t n, Oracle inner) {
    return Oracle(std::make_shared<Node>(Section{n, std::move(inner)}));
  }

  // Built-in reachability solvers under the fixed query encoding: a query of
  // length a*a is the row-major adjacency matrix of a digraph on a vertices;
  // source 0, target a-1. Anything else (including invalid 1stconn
  // instances) answers false.
  static Oracle solver(SolverKind kind) {
    return Oracle(std::make_shared<Node>(Solver{kind}));
  }

  bool answer(const BitString& w) const { return answer_node(*node_, w); }
  bool operator()(const BitString& w) const { return answer(w); }

  // Enumerates the support restricted to strings of length at most max_len.
  // Solver-backed oracles have no finite description and cannot be listed.
  std::set<BitString> support_up_to(std::size_t max_len) const {
    std::set<BitString> out;
    collect_support(*node_, max_len, out);
    return out;
  }

  bool is_function_backed() const { return std::holds_alternative<FunctionBacked>(*node_); }

  const TotalFn& backing_fn() const {
    if (!is_function_backed()) throw std::logic_error("Oracle: not function-backed");
    return std::get<FunctionBacked>(*node_).f;
  }

 private:
  struct FiniteSupport {
    std::set<BitString> support;
  };
  struct FunctionBacked {
    TotalFn f;
  };
  struct Union {
    std::vector<Oracle> members;
  };
  struct Section {
    std::size_t n;
    Oracle inner;
  };
  struct Solver {
    SolverKind kind;
  };
  using Node = std::variant<FiniteSupport, FunctionBacked, Union, Section, Solver>;

  explicit Oracle(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  static bool answer_node(const Node& node, const BitString& w) {
    if (const auto* fs = std::get_if<FiniteSupport>(&node)) {
      return fs->support.count(w) > 0;
    }
    if (const auto* fb = std::get_if<FunctionBacked>(&node)) {
      std::size_t n = fb->f.width;
      std::size_t lg = static_cast<std::size_t>(loglen(n));
      if (w.length() != n + lg) return false;
      Nat i = index_decode(w.substr(n, lg));
      if (i >= n) return false;
      return fb->f.at(w.substr(0, n)).bit(static_cast<std::size_t>(i));
    }
    if (const auto* un = std::get_if<Union>(&node)) {
      for (const Oracle& m : un->members)
        if (m.answer(w)) return true;
      return false;
    }
    if (const auto* sec = std::get_if<Section>(&node)) {
      if (w.length() != sec->n + static_cast<std::size_t>(loglen(sec->n))) return false;
      return sec->inner.answer(w);
    }
    const auto& sv = std::get<Solver>(node);
    return solve_reachability_query(sv.kind, w);
  }

  static bool solve_reachability_query(SolverKind kind, const BitString& w) {
    std::size_t m = w.length();
    std::size_t a = 0;
    while (a * a < m) ++a;
    if (a == 0 || a * a != m) return false;
    Digraph g;
    g.a = a;
    for (std::size_t u = 0; u < a; ++u)
      for (std::size_t v = 0; v < a; ++v)
        if (w.bit(u * a + v)) g.edges.insert({u, v});
    if (kind == SolverKind::Stconn) return stconn(g, 0, a - 1);
    auto adj = g.adjacency();
    for (std::size_t u = 0; u < a; ++u)
      if (adj[u].size() > 1) return false;  // invalid instance: non-member
    return onestconn(g, 0, a - 1);
  }

  static void collect_support(const Node& node, std::size_t max_len, std::set<BitString>& out) {
    if (const auto* fs = std::get_if<FiniteSupport>(&node)) {
      for (const BitString& s : fs->support)
        if (s.length() <= max_len) out.insert(s);
      return;
    }
    if (const auto* fb = std::get_if<FunctionBacked>(&node)) {
      std::size_t n = fb->f.width;
      if (n + static_cast<std::size_t>(loglen(n)) > max_len) return;
      for (std::size_t xi = 0; xi < fb->f.values.size(); ++xi) {
        const BitString& val = fb->f.values[xi];
        for (std::size_t i = 0; i < n; ++i)
          if (val.bit(i)) {
            out.insert(to_bits(xi, n).concat(index_code(i, n)));
          }
      }
      return;
    }
    if (const auto* un = std::get_if<Union>(&node)) {
      for (const Oracle& m : un->members) collect_support(*m.node_, max_len, out);
      return;
    }
    if (const auto* sec = std::get_if<Section>(&node)) {
      std::set<BitString> inner;
      collect_support(*sec->inner.node_, max_len, inner);
      std::size_t want = sec->n + static_cast<std::size_t>(loglen(sec->n));
      for (const BitString& s : inner)
        if (s.length() == want) out.insert(s);
      return;
    }
    throw std::logic_error("Oracle: solver-backed oracles have no enumerable support");
  }

  std::shared_ptr<const Node> node_;
};

// A_f of Def 3.3 for total f.
inline Oracle afun(TotalFn f) { return Oracle::function_backed(std::move(f)); }

// Recovers the unique f of width n whose bit graph agrees with `a` on
// strings of length n + loglen(n).
inline TotalFn reconstruct(const Oracle& a, std::size_t n) {
  TotalFn f(n);
  std::size_t count = std::size_t{1} << n;
  for (std::size_t xi = 0; xi < count; ++xi) {
    BitString x = to_bits(xi, n);
    BitString v(n);
    for (std::size_t i = 0; i < n; ++i)
      v.set_bit(i, a.answer(x.concat(index_code(i, n))));
    f.values[xi] = v;
  }
  return f;
}

inline Oracle section(std::size_t n, Oracle a) { return Oracle::section_of(n, std::move(a)); }

inline Oracle union_oracle(std::vector<Oracle> members) {
  return Oracle::union_of(std::move(members));
}

// f is ell-sequential if the chain 0, f(0), ..., f^k(0) is defined up to
// some k <= ell and exits dom f at step k.
inline bool is_sequential(const PartialFn& f, Nat ell) {
  BitString cur = BitString::zeros(f.width);
  for (Nat k = 0; k <= ell; ++k) {
    if (!f.defined(cur)) return true;
    cur = f.at(cur);
  }
  return false;
}

// (ell+1)-sequential extension of an ell-sequential f to domain dom f u M.
// Every new point maps to the lexicographically smallest string of width n
// outside M u dom f.
inline PartialFn extend_sequential(const PartialFn& f, const std::set<BitString>& m, Nat ell) {
  for (const BitString& x : m)
    if (x.length() != f.width)
      throw std::invalid_argument("extend_sequential: M element width mismatch");
  if (!is_sequential(f, ell))
    throw std::invalid_argument("extend_sequential: f is not ell-sequential");
  std::set<BitString> blocked = m;
  for (const auto& [x, v] : f.table) blocked.insert(x);
  if (f.width > 24 || blocked.size() >= (std::size_t{1} << f.width))
    throw std::invalid_argument("extend_sequential: domain full, no fresh value exists");

  PartialFn out = f;
  bool fresh_needed = false;
  for (const BitString& x : m)
    if (!f.defined(x)) fresh_needed = true;
  if (!fresh_needed) return out;

  BitString fresh;
  std::size_t count = std::size_t{1} << f.width;
  for (std::size_t i = 0; i < count; ++i) {
    BitString cand = to_bits(i, f.width);
    if (!blocked.count(cand)) {
      fresh = cand;
      break;
    }
  }
  for (const BitString& x : m)
    if (!out.defined(x)) out.define(x, fresh);
  return out;
}

}  // namespace rsc
