#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cordial/errors.hpp"
#include "cordial/rng.hpp"

namespace cordial {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

/// Largest order a Graph may have. The adjacency matrix is dense, so this
/// bounds memory at kMaxOrder^2 / 8 bytes.
inline constexpr std::size_t kMaxOrder = std::size_t{1} << 15;

using Edge = std::pair<std::size_t, std::size_t>;

class GraphBuilder;

/**
 * Immutable simple undirected graph stored as a symmetric bit matrix.
 *
 * Each row occupies words_per_row() 64-bit words; bits past column n-1 are
 * always zero so row population counts are exact degrees.
 */
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }
  std::size_t words_per_row() const noexcept { return words_; }

  std::span<const Word> row(std::size_t v) const noexcept {
    return {bits_.data() + v * words_, words_};
  }

  bool adjacent(std::size_t u, std::size_t v) const noexcept {
    return (bits_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1u;
  }

  std::size_t degree(std::size_t v) const noexcept {
    std::size_t d = 0;
    for (Word w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> bits_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) {
    if (n > kMaxOrder)
      throw SizeError("graph order " + std::to_string(n) + " exceeds the limit of " +
                      std::to_string(kMaxOrder));
    g_.n_ = n;
    g_.words_ = (n + kWordBits - 1) / kWordBits;
    g_.bits_.assign(n * g_.words_, 0);
  }

  std::size_t vertex_count() const noexcept { return g_.n_; }

  bool has_edge(std::size_t u, std::size_t v) const noexcept { return g_.adjacent(u, v); }

  /// Adds uv. Returns false if the edge was already present.
  bool add_edge(std::size_t u, std::size_t v) {
    if (u >= g_.n_ || v >= g_.n_)
      throw ParameterError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                           ") has an endpoint outside 0.." + std::to_string(g_.n_));
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    if (g_.adjacent(u, v)) return false;
    set(u, v);
    set(v, u);
    ++g_.m_;
    return true;
  }

  Graph build() && { return std::move(g_); }

 private:
  void set(std::size_t u, std::size_t v) {
    g_.bits_[u * g_.words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
  }

  Graph g_;
};

inline Graph graph_from_edges(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v)
      if (!seen[v] && g.adjacent(u, v)) {
        seen[v] = 1;
        ++reached;
        stack.push_back(v);
      }
  }
  return reached == n;
}

inline bool is_tree(const Graph& g) {
  return g.vertex_count() >= 1 && g.edge_count() + 1 == g.vertex_count() && is_connected(g);
}

// ---------------------------------------------------------------------------
// Families

enum class Family { path, cycle, complete, star, multipartite, wheel, fan, join };

inline const char* family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::star: return "star";
    case Family::multipartite: return "multipartite";
    case Family::wheel: return "wheel";
    case Family::fan: return "fan";
    case Family::join: return "join";
  }
  return "?";
}

inline Family parse_family(const std::string& name) {
  for (Family f : {Family::path, Family::cycle, Family::complete, Family::star,
                   Family::multipartite, Family::wheel, Family::fan, Family::join})
    if (name == family_name(f)) return f;
  throw ParameterError("unknown graph family '" + name + "'");
}

/**
 * Parameters of one of the named graph families.
 *
 * params holds n for path/cycle/complete/wheel, n for the star K_{1,n}, the
 * part sizes for multipartite, and (m, n) for the fan. A join carries its
 * two operands in `operands` and no params.
 */
struct FamilySpec {
  Family family = Family::path;
  std::vector<std::size_t> params;
  std::vector<FamilySpec> operands;

  static FamilySpec path(std::size_t n) { return {Family::path, {n}, {}}; }
  static FamilySpec cycle(std::size_t n) { return {Family::cycle, {n}, {}}; }
  static FamilySpec complete(std::size_t n) { return {Family::complete, {n}, {}}; }
  static FamilySpec star(std::size_t leaves) { return {Family::star, {leaves}, {}}; }
  static FamilySpec multipartite(std::vector<std::size_t> parts) {
    return {Family::multipartite, std::move(parts), {}};
  }
  static FamilySpec wheel(std::size_t n) { return {Family::wheel, {n}, {}}; }
  static FamilySpec fan(std::size_t m, std::size_t n) { return {Family::fan, {m, n}, {}}; }
  static FamilySpec join(FamilySpec a, FamilySpec b) {
    return {Family::join, {}, {std::move(a), std::move(b)}};
  }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

namespace detail {

inline void require(bool ok, const FamilySpec& spec, const std::string& constraint);

}  // namespace detail

inline std::string to_string(const FamilySpec& spec);

/// Throws ParameterError naming the first violated constraint.
inline void validate(const FamilySpec& spec) {
  using detail::require;
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::path:
    case Family::complete:
      require(p.size() == 1, spec, "exactly one parameter n");
      require(p[0] >= 1, spec, "n >= 1");
      break;
    case Family::star:
      require(p.size() == 1, spec, "exactly one parameter n");
      break;
    case Family::cycle:
      require(p.size() == 1, spec, "exactly one parameter n");
      require(p[0] >= 3, spec, "n >= 3");
      break;
    case Family::wheel:
      require(p.size() == 1, spec, "exactly one parameter n");
      require(p[0] >= 4, spec, "n >= 4");
      break;
    case Family::fan:
      require(p.size() == 2, spec, "exactly two parameters m, n");
      require(p[0] >= 1, spec, "m >= 1");
      require(p[1] >= 1, spec, "n >= 1");
      break;
    case Family::multipartite:
      require(!p.empty(), spec, "at least one part");
      for (std::size_t part : p) require(part >= 1, spec, "every part >= 1");
      break;
    case Family::join:
      require(p.empty() && spec.operands.size() == 2, spec, "exactly two operands");
      validate(spec.operands[0]);
      validate(spec.operands[1]);
      break;
  }
}

/// Order of the graph generate(spec) would return. spec must be valid.
inline std::size_t family_order(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::star: return p[0] + 1;
    case Family::fan: return p[0] + p[1];
    case Family::multipartite: return std::accumulate(p.begin(), p.end(), std::size_t{0});
    case Family::join: return family_order(spec.operands[0]) + family_order(spec.operands[1]);
    default: return p[0];
  }
}

inline Graph empty_graph(std::size_t n) { return std::move(GraphBuilder(n)).build(); }

/**
 * Disjoint union of g1 and g2 plus every edge between them. g1 keeps indices
 * 0..n1-1 and g2's vertices are shifted up by n1.
 */
inline Graph join(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.vertex_count();
  const std::size_t n2 = g2.vertex_count();
  if (n1 > kMaxOrder - std::min(n2, kMaxOrder))
    throw SizeError("join of orders " + std::to_string(n1) + " and " + std::to_string(n2) +
                    " exceeds the limit of " + std::to_string(kMaxOrder));
  GraphBuilder b(n1 + n2);
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges()) b.add_edge(n1 + u, n1 + v);
  for (std::size_t u = 0; u < n1; ++u)
    for (std::size_t v = 0; v < n2; ++v) b.add_edge(u, n1 + v);
  return std::move(b).build();
}

/**
 * Canonical member of a family.
 *
 * Wheel: vertices 0..n-2 form the rim cycle, n-1 is the hub. Fan: 0..n-1 is
 * the path, n..n+m-1 the independent set. Star K_{1,n}: vertex 0 is the
 * centre. Multipartite parts occupy consecutive blocks in input order.
 */
inline Graph generate(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  if (spec.family == Family::join)
    return join(generate(spec.operands[0]), generate(spec.operands[1]));

  GraphBuilder b(family_order(spec));
  switch (spec.family) {
    case Family::path:
      for (std::size_t i = 0; i + 1 < p[0]; ++i) b.add_edge(i, i + 1);
      break;
    case Family::cycle:
      for (std::size_t i = 0; i < p[0]; ++i) b.add_edge(i, (i + 1) % p[0]);
      break;
    case Family::complete:
      for (std::size_t u = 0; u < p[0]; ++u)
        for (std::size_t v = u + 1; v < p[0]; ++v) b.add_edge(u, v);
      break;
    case Family::star:
      for (std::size_t v = 1; v <= p[0]; ++v) b.add_edge(0, v);
      break;
    case Family::wheel: {
      const std::size_t rim = p[0] - 1;
      for (std::size_t i = 0; i < rim; ++i) {
        b.add_edge(i, (i + 1) % rim);
        b.add_edge(i, rim);
      }
      break;
    }
    case Family::fan: {
      const std::size_t m = p[0], n = p[1];
      for (std::size_t i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
      for (std::size_t u = n; u < n + m; ++u)
        for (std::size_t v = 0; v < n; ++v) b.add_edge(u, v);
      break;
    }
    case Family::multipartite: {
      std::vector<std::size_t> block(b.vertex_count());
      std::size_t next = 0;
      for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p[i]; ++j) block[next++] = i;
      for (std::size_t u = 0; u < next; ++u)
        for (std::size_t v = u + 1; v < next; ++v)
          if (block[u] != block[v]) b.add_edge(u, v);
      break;
    }
    case Family::join: break;
  }
  return std::move(b).build();
}

/// Tree decoded from a uniformly random Pruefer sequence.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ParameterError("random_tree requires n >= 1");
  GraphBuilder b(n);
  if (n == 2) b.add_edge(0, 1);
  if (n <= 2) return std::move(b).build();

  Rng rng(seed);
  std::vector<std::size_t> code(n - 2);
  for (auto& c : code) c = uniform_below(rng, n);

  std::vector<std::size_t> degree(n, 1);
  for (std::size_t c : code) ++degree[c];

  // Linear-time decode: `leaf` tracks the smallest current leaf.
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (std::size_t c : code) {
    b.add_edge(leaf, c);
    if (--degree[c] == 1 && c < ptr) {
      leaf = c;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  b.add_edge(leaf, n - 1);
  return std::move(b).build();
}

/// G(n, 1/2): each pair is an edge independently with probability one half.
inline Graph random_graph(std::size_t n, Rng& rng) {
  GraphBuilder b(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) b.add_edge(u, v);
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Textual family specs: "cycle:6", "fan:2,3", "multipartite:3,3,1",
// "join(cycle:4,complete:1)".

inline std::string to_string(const FamilySpec& spec) {
  std::string out = family_name(spec.family);
  if (spec.family == Family::join)
    return out + "(" + to_string(spec.operands[0]) + "," + to_string(spec.operands[1]) + ")";
  out += ':';
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(spec.params[i]);
  }
  return out;
}

namespace detail {

inline void require(bool ok, const FamilySpec& spec, const std::string& constraint) {
  if (!ok)
    throw ParameterError(std::string(family_name(spec.family)) + " requires " + constraint +
                         (spec.family == Family::join ? "" : " (got " + to_string(spec) + ")"));
}

class SpecParser {
 public:
  explicit SpecParser(const std::string& text) : s_(text) {}

  FamilySpec parse() {
    FamilySpec spec = parse_one();
    if (pos_ != s_.size()) fail("trailing characters");
    validate(spec);
    return spec;
  }

 private:
  FamilySpec parse_one() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] >= 'a' && s_[pos_] <= 'z') ++pos_;
    const Family family = parse_family(s_.substr(start, pos_ - start));
    FamilySpec spec{family, {}, {}};
    if (family == Family::join) {
      expect('(');
      spec.operands.push_back(parse_one());
      expect(',');
      spec.operands.push_back(parse_one());
      expect(')');
      return spec;
    }
    expect(':');
    spec.params.push_back(parse_number());
    while (pos_ < s_.size() && s_[pos_] == ',' && pos_ + 1 < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      spec.params.push_back(parse_number());
    }
    return spec;
  }

  std::size_t parse_number() {
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(s_[pos_] - '0');
      if (value > kMaxOrder) fail("parameter too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParameterError("bad family spec '" + s_ + "': " + why + " at position " +
                         std::to_string(pos_));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Inverse of to_string(FamilySpec). Validates the result.
inline FamilySpec parse_family_spec(const std::string& text) {
  return detail::SpecParser(text).parse();
}

}  // namespace cordial
