#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rsc/encoding.hpp"

namespace rsc {

// Directed graph on vertices 0..a-1, encoded as (a, E).
struct Digraph {
  std::size_t a = 0;
  std::set<std::pair<std::size_t, std::size_t>> edges;

  void add_edge(std::size_t u, std::size_t v) {
    if (u >= a || v >= a) throw std::out_of_range("Digraph::add_edge: endpoint out of range");
    edges.insert({u, v});
  }

  bool has_edge(std::size_t u, std::size_t v) const { return edges.count({u, v}) > 0; }

  std::vector<std::vector<std::size_t>> adjacency() const {
    std::vector<std::vector<std::size_t>> adj(a);
    for (const auto& [u, v] : edges) adj[u].push_back(v);
    return adj;
  }
};

// s-t reachability; paths of length 0 count, so stconn(g, s, s) holds.
inline bool stconn(const Digraph& g, std::size_t s, std::size_t t) {
  if (s >= g.a || t >= g.a) throw std::out_of_range("stconn: vertex out of range");
  std::vector<bool> seen(g.a, false);
  std::vector<std::size_t> work{s};
  seen[s] = true;
  auto adj = g.adjacency();
  while (!work.empty()) {
    std::size_t u = work.back();
    work.pop_back();
    if (u == t) return true;
    for (std::size_t v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        work.push_back(v);
      }
  }
  return false;
}

// Reachability when every vertex has outdegree at most one: chase the unique
// pointer from s for at most a steps.
inline bool onestconn(const Digraph& g, std::size_t s, std::size_t t) {
  if (s >= g.a || t >= g.a) throw std::out_of_range("onestconn: vertex out of range");
  auto adj = g.adjacency();
  for (std::size_t u = 0; u < g.a; ++u)
    if (adj[u].size() > 1)
      throw std::invalid_argument("onestconn: vertex with outdegree greater than one");
  std::size_t cur = s;
  for (std::size_t step = 0; step <= g.a; ++step) {
    if (cur == t) return true;
    if (adj[cur].empty()) return false;
    cur = adj[cur][0];
  }
  return false;
}

// Layered reachability witness: Y[z][x] holds iff there is a path from 0 to
// x of length <= z, for z in [0,a].
inline std::vector<std::vector<bool>> conn_witness(const Digraph& g) {
  std::vector<std::vector<bool>> y(g.a + 1, std::vector<bool>(g.a, false));
  if (g.a == 0) return y;
  y[0][0] = true;
  for (std::size_t z = 0; z < g.a; ++z) {
    for (std::size_t x = 0; x < g.a; ++x) {
      bool v = y[z][x];
      if (!v) {
        for (std::size_t u = 0; u < g.a && !v; ++u)
          if (y[z][u] && g.has_edge(u, x)) v = true;
      }
      y[z + 1][x] = v;
    }
  }
  return y;
}

// Transitive-closure-of-0 witness for functional graphs: entry v is the
// vertex at distance v from 0. Requires outdegree exactly one everywhere.
inline NumberSeq path_witness(const Digraph& g) {
  auto adj = g.adjacency();
  if (g.a == 0) return NumberSeq::encode({});
  for (std::size_t u = 0; u < g.a; ++u)
    if (adj[u].size() != 1)
      throw std::invalid_argument("path_witness: hypothesis requires outdegree exactly one");
  std::vector<Nat> entries;
  entries.reserve(g.a + 1);
  std::size_t cur = 0;
  for (std::size_t v = 0; v <= g.a; ++v) {
    entries.push_back(cur);
    cur = adj[cur][0];
  }
  return NumberSeq::encode(entries);
}

// Vertex sequence form of path_witness, convenient for reports.
inline std::vector<std::size_t> path_vertices(const Digraph& g) {
  auto adj = g.adjacency();
  if (g.a == 0) return {};
  for (std::size_t u = 0; u < g.a; ++u)
    if (adj[u].size() != 1)
      throw std::invalid_argument("path_vertices: hypothesis requires outdegree exactly one");
  std::vector<std::size_t> out;
  out.reserve(g.a + 1);
  std::size_t cur = 0;
  for (std::size_t v = 0; v <= g.a; ++v) {
    out.push_back(cur);
    cur = adj[cur][0];
  }
  return out;
}

}  // namespace rsc
