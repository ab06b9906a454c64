#pragma once

// Reference solver: recomputes every statistic from scratch for all 2^n
// labellings. Deliberately shares nothing with the Gray-code engine except
// Graph::adjacent.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "cordial/graph.hpp"
#include "cordial/labelling.hpp"

namespace cordial::oracle {

struct NaiveResult {
  std::size_t d1 = 0;
  Labelling d1_witness;
  std::size_t d2 = 0;
  Labelling d2_witness;
  std::uint64_t labellings_visited = 0;
};

struct NaiveStats {
  long v0 = 0, v1 = 0, e0 = 0, e1 = 0;
};

inline NaiveStats naive_stats(const Graph& g, const std::vector<int>& f) {
  NaiveStats s;
  const std::size_t n = g.vertex_count();
  for (std::size_t i = 0; i < n; ++i) (f[i] ? s.v1 : s.v0) += 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (g.adjacent(i, j)) (f[i] == f[j] ? s.e0 : s.e1) += 1;
  return s;
}

/// Enumerates labellings in lexicographic order of the bit-string (vertex 0
/// first), so the first strict improvement is the lexicographically smallest
/// minimizer.
inline NaiveResult naive_solve(const Graph& g) {
  const std::size_t n = g.vertex_count();
  NaiveResult r;
  long best1 = std::numeric_limits<long>::max(), best2 = std::numeric_limits<long>::max();
  std::vector<int> f(n), w1(n), w2(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::size_t i = 0; i < n; ++i) f[i] = static_cast<int>((code >> (n - 1 - i)) & 1u);
    const NaiveStats s = naive_stats(g, f);
    const long dv = s.v0 > s.v1 ? s.v0 - s.v1 : s.v1 - s.v0;
    const long de = s.e0 > s.e1 ? s.e0 - s.e1 : s.e1 - s.e0;
    if (dv + de < best1) {
      best1 = dv + de;
      w1 = f;
    }
    if (dv <= 1 && de < best2) {
      best2 = de;
      w2 = f;
    }
    ++r.labellings_visited;
  }
  r.d1 = static_cast<std::size_t>(best1);
  r.d2 = static_cast<std::size_t>(best2);
  r.d1_witness = Labelling(n);
  r.d2_witness = Labelling(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.d1_witness.set(i, w1[i]);
    r.d2_witness.set(i, w2[i]);
  }
  return r;
}

}  // namespace cordial::oracle
