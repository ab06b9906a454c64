#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cordial/errors.hpp"
#include "cordial/graph.hpp"
#include "cordial/labelling.hpp"

namespace cordial {

namespace detail {

struct LeafPair {
  std::size_t x, x_parent, y, y_parent;
};

inline std::size_t live_neighbour(const Graph& g, const std::vector<char>& removed, std::size_t v) {
  const auto row = g.row(v);
  for (std::size_t w = 0; w < row.size(); ++w)
    for (Word bits = row[w]; bits; bits &= bits - 1) {
      const std::size_t u = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
      if (!removed[u]) return u;
    }
  return v;
}

}  // namespace detail

/**
 * Labelling of a tree attaining delta_v + delta_e = 1.
 *
 * Leaves are stripped two at a time down to a single vertex or an edge, the
 * base is labelled directly, and the pairs are re-attached in reverse order.
 * A pair whose attachment points share a label gets opposite labels. When
 * the attachment points differ and n is even, the pair copies (or inverts)
 * its parents' labels to swing e0 - e1 from -1 to +1 (or back). When n is
 * odd, x is labelled 1 and y is then chosen to cancel the edge imbalance;
 * the whole labelling is complemented if that leaves v0 - v1 = -1.
 *
 * The result has v0 - v1 = n mod 2, and e0 - e1 = 0 for odd n or +-1 for
 * even n. This is checked before returning.
 */
inline Labelling tree_optimal_labelling(const Graph& g) {
  if (!is_tree(g)) throw StructureError("tree_optimal_labelling requires a tree");
  const std::size_t n = g.vertex_count();
  const bool odd = n % 2 == 1;

  std::vector<std::size_t> degree(n);
  std::vector<std::size_t> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 1) leaves.push_back(v);
  }

  std::vector<char> removed(n, 0);
  std::vector<detail::LeafPair> pairs;
  std::size_t remaining = n;
  while (remaining >= 3) {
    const std::size_t x = leaves.back();
    leaves.pop_back();
    const std::size_t y = leaves.back();
    leaves.pop_back();
    detail::LeafPair p{x, detail::live_neighbour(g, removed, x), y,
                       detail::live_neighbour(g, removed, y)};
    removed[x] = removed[y] = 1;
    for (std::size_t parent : {p.x_parent, p.y_parent})
      if (--degree[parent] == 1) leaves.push_back(parent);
    pairs.push_back(p);
    remaining -= 2;
  }

  // Labels are stored relative to `inverted` so complementing is O(1).
  std::vector<std::uint8_t> raw(n, 0);
  std::uint8_t inverted = 0;
  auto label = [&](std::size_t v) -> int { return raw[v] ^ inverted; };
  auto assign = [&](std::size_t v, int l) { raw[v] = static_cast<std::uint8_t>(l ^ inverted); };

  std::int64_t v_diff = 0, e_diff = 0;
  {
    std::vector<std::size_t> base;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v]) base.push_back(v);
    assign(base[0], 0);
    v_diff = 1;
    if (base.size() == 2) {
      assign(base[1], 1);
      v_diff = 0;
      e_diff = -1;
    }
  }

  for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
    const auto& p = *it;
    const int xl = label(p.x_parent), yl = label(p.y_parent);
    if (xl == yl) {
      assign(p.x, 0);
      assign(p.y, 1);
    } else if (!odd) {
      const bool copy = e_diff < 0;
      assign(p.x, copy ? xl : 1 - xl);
      assign(p.y, copy ? yl : 1 - yl);
      e_diff += copy ? 2 : -2;
    } else {
      assign(p.x, 1);
      v_diff -= 1;
      e_diff += xl == 1 ? 1 : -1;
      const int l = e_diff < 0 ? yl : 1 - yl;
      assign(p.y, l);
      e_diff += l == yl ? 1 : -1;
      v_diff += l == 0 ? 1 : -1;
      if (v_diff < 0) {
        inverted ^= 1u;
        v_diff = -v_diff;
      }
    }
  }

  Labelling f(n);
  for (std::size_t v = 0; v < n; ++v) f.set(v, label(v));

  const auto s = stats(g, f);
  const std::int64_t vd = static_cast<std::int64_t>(s.v0) - static_cast<std::int64_t>(s.v1);
  const std::int64_t ed = static_cast<std::int64_t>(s.e0) - static_cast<std::int64_t>(s.e1);
  const bool ok = vd == static_cast<std::int64_t>(n % 2) && (odd ? ed == 0 : (ed == 1 || ed == -1));
  if (!ok)
    throw DefectError("tree labelling postcondition failed: v0-v1=" + std::to_string(vd) +
                      ", e0-e1=" + std::to_string(ed) + " on " + std::to_string(n) + " vertices");
  return f;
}

}  // namespace cordial
