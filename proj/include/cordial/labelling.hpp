#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "cordial/errors.hpp"
#include "cordial/graph.hpp"

namespace cordial {

/// A 0/1 label per vertex. Edge labels are induced as |f(x) - f(y)|.
class Labelling {
 public:
  Labelling() = default;
  explicit Labelling(std::size_t n) : bits_(n, 0) {}

  /// Bits 0..n-1 of mask give the labels of vertices 0..n-1.
  static Labelling from_mask(std::uint64_t mask, std::size_t n) {
    Labelling f(n);
    for (std::size_t i = 0; i < n; ++i) f.bits_[i] = static_cast<std::uint8_t>((mask >> i) & 1u);
    return f;
  }

  /// Parses a string of '0'/'1', vertex 0 first.
  static Labelling from_string(std::string_view s) {
    Labelling f(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1')
        throw ParameterError("labelling strings contain only '0' and '1'");
      f.bits_[i] = static_cast<std::uint8_t>(s[i] - '0');
    }
    return f;
  }

  std::size_t size() const noexcept { return bits_.size(); }
  int operator[](std::size_t v) const noexcept { return bits_[v]; }
  void set(std::size_t v, int label) { bits_[v] = static_cast<std::uint8_t>(label & 1); }
  void toggle(std::size_t v) { bits_[v] ^= 1u; }

  Labelling complement() const {
    Labelling f = *this;
    for (auto& b : f.bits_) b ^= 1u;
    return f;
  }

  /// Only meaningful for n <= 64.
  std::uint64_t to_mask() const noexcept {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < bits_.size() && i < 64; ++i)
      mask |= std::uint64_t{bits_[i]} << i;
    return mask;
  }

  std::string to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = static_cast<char>('0' + bits_[i]);
    return s;
  }

  friend bool operator==(const Labelling&, const Labelling&) = default;
  /// Lexicographic on the bit-string, vertex 0 first.
  friend auto operator<=>(const Labelling&, const Labelling&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct LabellingStats {
  std::size_t v0 = 0, v1 = 0;
  std::size_t e0 = 0, e1 = 0;
  std::size_t delta_v = 0, delta_e = 0;

  friend bool operator==(const LabellingStats&, const LabellingStats&) = default;
};

namespace detail {

inline void check_length(const Graph& g, const Labelling& f) {
  if (f.size() != g.vertex_count())
    throw DimensionError("labelling has length " + std::to_string(f.size()) + " but the graph has " +
                         std::to_string(g.vertex_count()) + " vertices");
}

inline std::vector<Word> label_words(const Graph& g, const Labelling& f) {
  check_length(g, f);
  std::vector<Word> words(g.words_per_row(), 0);
  for (std::size_t v = 0; v < f.size(); ++v)
    if (f[v]) words[v / kWordBits] |= Word{1} << (v % kWordBits);
  return words;
}

/// Neighbours of v carrying the same label as v.
inline std::size_t same_label_neighbours(const Graph& g, const std::vector<Word>& labels,
                                         std::size_t v) {
  const auto row = g.row(v);
  const bool one = (labels[v / kWordBits] >> (v % kWordBits)) & 1u;
  std::size_t same = 0;
  for (std::size_t w = 0; w < row.size(); ++w)
    same += static_cast<std::size_t>(std::popcount(row[w] & (one ? labels[w] : ~labels[w])));
  return same;
}

inline std::size_t abs_diff(std::size_t a, std::size_t b) { return a > b ? a - b : b - a; }

}  // namespace detail

inline LabellingStats stats(const Graph& g, const Labelling& f) {
  const auto labels = detail::label_words(g, f);
  LabellingStats s;
  std::size_t same_twice = 0;
  for (std::size_t v = 0; v < f.size(); ++v) {
    (f[v] ? s.v1 : s.v0) += 1;
    same_twice += detail::same_label_neighbours(g, labels, v);
  }
  s.e0 = same_twice / 2;
  s.e1 = g.edge_count() - s.e0;
  s.delta_v = detail::abs_diff(s.v0, s.v1);
  s.delta_e = detail::abs_diff(s.e0, s.e1);
  return s;
}

/**
 * Labelling plus running imbalance counters, updated one vertex flip at a
 * time.
 *
 * Invariants: same_count(v) is the number of neighbours of v sharing its
 * label; v_diff() = v0 - v1 and e_diff() = e0 - e1 for the current labelling.
 * The graph must outlive the state.
 */
class SweepState {
 public:
  SweepState(const Graph& g, const Labelling& f)
      : g_(&g), labels_(detail::label_words(g, f)), same_(g.vertex_count()) {
    std::int64_t same_twice = 0;
    for (std::size_t v = 0; v < f.size(); ++v) {
      v_diff_ += f[v] ? -1 : 1;
      same_[v] = static_cast<std::uint32_t>(detail::same_label_neighbours(g, labels_, v));
      same_twice += same_[v];
    }
    const auto e0 = same_twice / 2;
    e_diff_ = e0 - (static_cast<std::int64_t>(g.edge_count()) - e0);
  }

  /// Complements the label of v in O(deg(v) + words) time.
  void flip(std::size_t v) {
    if (v >= g_->vertex_count())
      throw DimensionError("vertex " + std::to_string(v) + " out of range for a graph on " +
                           std::to_string(g_->vertex_count()) + " vertices");
    const std::size_t word = v / kWordBits;
    const Word bit = Word{1} << (v % kWordBits);
    const bool was_one = labels_[word] & bit;
    const auto row = g_->row(v);

    // One pass over the row: popcount for the edge balance, and a walk over
    // the set bits to adjust each neighbour's same-label count.
    std::int64_t same = 0, degree = 0;
    for (std::size_t w = 0; w < row.size(); ++w) {
      const Word same_bits = row[w] & (was_one ? labels_[w] : ~labels_[w]);
      same += std::popcount(same_bits);
      degree += std::popcount(row[w]);
      for (Word bits = row[w]; bits; bits &= bits - 1) {
        const std::size_t u = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
        if ((same_bits >> (u % kWordBits)) & 1u)
          --same_[u];
        else
          ++same_[u];
      }
    }
    // e0 goes from `same` to `degree - same` at v, and e0 - e1 = 2 e0 - m.
    e_diff_ += 2 * (degree - 2 * same);
    v_diff_ += was_one ? 2 : -2;
    same_[v] = static_cast<std::uint32_t>(degree - same);
    labels_[word] ^= bit;
  }

  std::int64_t v_diff() const noexcept { return v_diff_; }
  std::int64_t e_diff() const noexcept { return e_diff_; }
  std::size_t same_count(std::size_t v) const noexcept { return same_[v]; }
  int label(std::size_t v) const noexcept {
    return static_cast<int>((labels_[v / kWordBits] >> (v % kWordBits)) & 1u);
  }

  Labelling current() const {
    Labelling f(g_->vertex_count());
    for (std::size_t v = 0; v < f.size(); ++v) f.set(v, label(v));
    return f;
  }

 private:
  const Graph* g_;
  std::vector<Word> labels_;
  std::vector<std::uint32_t> same_;
  std::int64_t v_diff_ = 0;
  std::int64_t e_diff_ = 0;
};

}  // namespace cordial
