#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "cordial/graph.hpp"
#include "cordial/labelling.hpp"
#include "cordial/rng.hpp"

namespace cordial::testing {

inline Labelling random_labelling(std::size_t n, Rng& rng) {
  Labelling f(n);
  for (std::size_t v = 0; v < n; ++v) f.set(v, coin(rng) ? 1 : 0);
  return f;
}

/// G(n, 1/2) conditioned on being connected (rejection sampling).
inline Graph random_connected_graph(std::size_t n, Rng& rng) {
  for (;;) {
    Graph g = random_graph(n, rng);
    if (is_connected(g)) return g;
  }
}

/**
 * Connected graph whose edge set is a union of edge-disjoint cycles, so every
 * vertex has even degree. Cycles are added over a growing vertex set and each
 * new cycle reuses at least one existing vertex.
 */
inline Graph random_eulerian_graph(std::size_t max_n, std::size_t cycles, Rng& rng) {
  std::vector<Edge> edges;
  auto has = [&](std::size_t u, std::size_t v) {
    for (auto [a, b] : edges)
      if ((a == u && b == v) || (a == v && b == u)) return true;
    return false;
  };
  std::size_t n = 3;
  edges = {{0, 1}, {1, 2}, {2, 0}};
  for (std::size_t c = 1; c < cycles; ++c) {
    for (int attempt = 0; attempt < 100; ++attempt) {
      const std::size_t len = uniform_between(rng, 3, 6);
      std::vector<std::size_t> cyc;
      cyc.push_back(uniform_below(rng, n));
      std::size_t fresh = n;
      bool ok = true;
      for (std::size_t i = 1; i < len && ok; ++i) {
        std::size_t v;
        if (fresh < max_n && coin(rng)) {
          v = fresh++;
        } else {
          v = uniform_below(rng, n);
        }
        for (std::size_t u : cyc) ok = ok && u != v;
        cyc.push_back(v);
      }
      if (!ok) continue;
      for (std::size_t i = 0; i < len && ok; ++i) {
        const std::size_t u = cyc[i], v = cyc[(i + 1) % len];
        ok = !has(u, v);
        for (std::size_t j = 0; j < i && ok; ++j) {
          const std::size_t a = cyc[j], b = cyc[(j + 1) % len];
          ok = !((a == u && b == v) || (a == v && b == u));
        }
      }
      if (!ok) continue;
      for (std::size_t i = 0; i < len; ++i) edges.emplace_back(cyc[i], cyc[(i + 1) % len]);
      n = fresh;
      break;
    }
  }
  return graph_from_edges(n, edges);
}

/// Calls visit(parts) for every multiset of positive parts with sum <= max_total,
/// parts listed in non-increasing order.
inline void for_each_part_multiset(std::size_t max_total,
                                   const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> parts;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t cap) {
    if (!parts.empty()) visit(parts);
    for (std::size_t p = std::min(cap, remaining); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(max_total, max_total);
}

}  // namespace cordial::testing
