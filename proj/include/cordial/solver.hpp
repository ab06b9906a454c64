#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "cordial/errors.hpp"
#include "cordial/graph.hpp"
#include "cordial/labelling.hpp"

namespace cordial {

/// Largest order solve_exact accepts. 2^29 Gray-code steps is the ceiling.
inline constexpr std::size_t kSolverCap = 30;

struct SolveOptions {
  unsigned threads = 1;
};

/**
 * Exact values of both cordiality measures.
 *
 * d1 = min over all labellings of delta_v + delta_e; d2 = min of delta_e over
 * labellings with delta_v <= 1. Witnesses are the lexicographically smallest
 * minimizers (vertex 0 first), which always label vertex 0 with 0.
 */
struct ExactResult {
  std::size_t d1 = 0;
  Labelling d1_witness;
  std::size_t d2 = 0;
  Labelling d2_witness;
  bool cordial = false;
  std::uint64_t labellings_visited = 0;
};

namespace detail {

/// Graph of order <= 30 packed into one 32-bit row per vertex.
struct PackedGraph {
  std::size_t n = 0;
  std::int64_t m = 0;
  std::array<std::uint32_t, 32> rows{};
  std::array<std::int64_t, 32> degree{};

  explicit PackedGraph(const Graph& g) : n(g.vertex_count()) {
    if (n == 0 || n > kSolverCap)
      throw CapacityError("exhaustive search needs 1 <= n <= " + std::to_string(kSolverCap) +
                          ", got n = " + std::to_string(n));
    m = static_cast<std::int64_t>(g.edge_count());
    for (std::size_t v = 0; v < n; ++v) {
      rows[v] = static_cast<std::uint32_t>(g.row(v)[0]);
      degree[v] = std::popcount(rows[v]);
    }
  }
};

/// Position of a labelling in lexicographic order of its bit-string.
inline std::uint32_t lex_key(std::uint32_t mask, std::size_t n) {
  mask = ((mask >> 1) & 0x55555555u) | ((mask & 0x55555555u) << 1);
  mask = ((mask >> 2) & 0x33333333u) | ((mask & 0x33333333u) << 2);
  mask = ((mask >> 4) & 0x0F0F0F0Fu) | ((mask & 0x0F0F0F0Fu) << 4);
  mask = ((mask >> 8) & 0x00FF00FFu) | ((mask & 0x00FF00FFu) << 8);
  mask = (mask >> 16) | (mask << 16);
  return mask >> (32 - n);
}

inline std::int64_t iabs(std::int64_t x) { return x < 0 ? -x : x; }

/**
 * Visits every labelling in one block: vertex 0 is 0, vertices above
 * `free_count` are fixed by `fixed`, and vertices 1..free_count run through
 * the reflected Gray code. visit(mask, v_diff, e_diff) returns false to stop.
 * Returns the number of labellings visited.
 */
template <class Visit>
std::uint64_t sweep_block(const PackedGraph& g, std::size_t free_count, std::uint32_t fixed,
                          Visit&& visit) {
  std::uint32_t mask = fixed;
  std::int64_t v_diff = 0, same_twice = 0;
  for (std::size_t v = 0; v < g.n; ++v) {
    const bool one = (mask >> v) & 1u;
    v_diff += one ? -1 : 1;
    same_twice += std::popcount(g.rows[v] & (one ? mask : ~mask));
  }
  std::int64_t e_diff = same_twice - g.m;  // e0 - e1 = 2*e0 - m

  if (!visit(mask, v_diff, e_diff)) return 1;
  const std::uint64_t steps = std::uint64_t{1} << free_count;
  for (std::uint64_t i = 1; i < steps; ++i) {
    const unsigned v = 1u + static_cast<unsigned>(std::countr_zero(i));
    const std::uint32_t bit = 1u << v;
    const bool one = mask & bit;
    const std::int64_t same = std::popcount(g.rows[v] & (one ? mask : ~mask));
    e_diff += 2 * (g.degree[v] - 2 * same);
    v_diff += one ? 2 : -2;
    mask ^= bit;
    if (!visit(mask, v_diff, e_diff)) return i + 1;
  }
  return steps;
}

/// Number of high vertices fixed per block for a given thread count.
inline std::size_t block_bits(std::size_t n, unsigned threads) {
  if (threads <= 1) return 0;
  const std::size_t wanted = static_cast<std::size_t>(std::bit_width(threads - 1u)) + 3;
  return std::min(wanted, n - 1);
}

/**
 * Runs work(block_index, free_count, fixed_mask) for every block, spreading
 * blocks over `threads` workers with a fixed stride. Each call writes only
 * its own slot of the caller's per-block output.
 */
template <class Work>
void for_each_block(std::size_t n, unsigned threads, Work&& work) {
  const std::size_t bits = block_bits(n, threads);
  const std::size_t free_count = n - 1 - bits;
  const std::size_t blocks = std::size_t{1} << bits;
  auto run = [&](std::size_t first, std::size_t stride) {
    for (std::size_t b = first; b < blocks; b += stride)
      work(b, free_count, static_cast<std::uint32_t>(b << (free_count + 1)));
  };
  const std::size_t workers = std::min<std::size_t>(std::max(threads, 1u), blocks);
  if (workers <= 1) {
    run(0, 1);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w, workers);
}

struct BlockBest {
  std::int64_t d1 = std::numeric_limits<std::int64_t>::max();
  std::uint32_t d1_key = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t d1_mask = 0;
  std::int64_t d2 = std::numeric_limits<std::int64_t>::max();
  std::uint32_t d2_key = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t d2_mask = 0;
  std::uint64_t visited = 0;

  void offer_d1(std::int64_t value, std::uint32_t mask, std::size_t n) {
    if (value > d1) return;
    const std::uint32_t key = lex_key(mask, n);
    if (value < d1 || key < d1_key) {
      d1 = value;
      d1_key = key;
      d1_mask = mask;
    }
  }

  void offer_d2(std::int64_t value, std::uint32_t mask, std::size_t n) {
    if (value > d2) return;
    const std::uint32_t key = lex_key(mask, n);
    if (value < d2 || key < d2_key) {
      d2 = value;
      d2_key = key;
      d2_mask = mask;
    }
  }

  void merge(const BlockBest& o, std::size_t n) {
    offer_d1(o.d1, o.d1_mask, n);
    offer_d2(o.d2, o.d2_mask, n);
    visited += o.visited;
  }
};

}  // namespace detail

/**
 * Exhaustive Gray-code search for both measures. Vertex 0 is pinned to label
 * 0, which is safe because complementing a labelling preserves delta_v and
 * delta_e. The result, witnesses included, does not depend on options.threads.
 */
inline ExactResult solve_exact(const Graph& g, SolveOptions options = {}) {
  const detail::PackedGraph packed(g);
  const std::size_t n = packed.n;
  std::vector<detail::BlockBest> best(std::size_t{1} << detail::block_bits(n, options.threads));

  detail::for_each_block(n, options.threads, [&](std::size_t b, std::size_t free_count,
                                                 std::uint32_t fixed) {
    detail::BlockBest local;
    local.visited = detail::sweep_block(
        packed, free_count, fixed, [&](std::uint32_t mask, std::int64_t vd, std::int64_t ed) {
          const std::int64_t dv = detail::iabs(vd), de = detail::iabs(ed);
          local.offer_d1(dv + de, mask, n);
          if (dv <= 1) local.offer_d2(de, mask, n);
          return true;
        });
    best[b] = local;
  });

  detail::BlockBest total;
  for (const auto& b : best) total.merge(b, n);

  ExactResult r;
  r.d1 = static_cast<std::size_t>(total.d1);
  r.d1_witness = Labelling::from_mask(total.d1_mask, n);
  r.d2 = static_cast<std::size_t>(total.d2);
  r.d2_witness = Labelling::from_mask(total.d2_mask, n);
  r.cordial = r.d2 <= 1;
  r.labellings_visited = total.visited;
  return r;
}

namespace detail {

/// True if some labelling satisfies pred(|v_diff|, |e_diff|). Stops early.
template <class Pred>
bool any_labelling(const Graph& g, SolveOptions options, Pred pred) {
  const PackedGraph packed(g);
  std::atomic<bool> found{false};
  for_each_block(packed.n, options.threads, [&](std::size_t, std::size_t free_count,
                                                std::uint32_t fixed) {
    if (found.load(std::memory_order_relaxed)) return;
    sweep_block(packed, free_count, fixed, [&](std::uint32_t, std::int64_t vd, std::int64_t ed) {
      if (pred(iabs(vd), iabs(ed))) {
        found.store(true, std::memory_order_relaxed);
        return false;
      }
      return !found.load(std::memory_order_relaxed);
    });
  });
  return found.load();
}

}  // namespace detail

/// Cordial iff d2 <= 1. Stops at the first cordial labelling.
inline bool is_cordial(const Graph& g, SolveOptions options = {}) {
  return detail::any_labelling(g, options,
                               [](std::int64_t dv, std::int64_t de) { return dv <= 1 && de <= 1; });
}

/// Every friendly labelling (delta_v <= 1) is cordial.
inline bool is_uniformly_cordial(const Graph& g, SolveOptions options = {}) {
  return !detail::any_labelling(g, options,
                                [](std::int64_t dv, std::int64_t de) { return dv <= 1 && de > 1; });
}

}  // namespace cordial
