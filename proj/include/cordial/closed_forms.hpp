#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cordial/errors.hpp"
#include "cordial/graph.hpp"
#include "cordial/labelling.hpp"
#include "cordial/tree_labelling.hpp"

namespace cordial {

/// Either an exact integer or a closed integer interval [lo, hi].
struct ClosedFormValue {
  enum class Kind { exact, interval };

  Kind kind = Kind::exact;
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  static ClosedFormValue exactly(std::int64_t v) { return {Kind::exact, v, v}; }
  static ClosedFormValue between(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw DefectError("empty closed-form interval");
    return {Kind::interval, lo, hi};
  }

  bool is_exact() const noexcept { return kind == Kind::exact; }

  std::int64_t value() const {
    if (!is_exact()) throw ParameterError("closed-form value is only known as an interval");
    return lo;
  }

  bool contains(std::int64_t x) const noexcept { return lo <= x && x <= hi; }

  std::string to_string() const {
    if (is_exact()) return std::to_string(lo);
    return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
  }

  friend bool operator==(const ClosedFormValue&, const ClosedFormValue&) = default;
};

struct MeasurePair {
  ClosedFormValue d1;
  ClosedFormValue d2;

  friend bool operator==(const MeasurePair&, const MeasurePair&) = default;
};

namespace detail {

inline std::int64_t isqrt(std::int64_t x) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

inline std::int64_t to_i64(std::size_t x) { return static_cast<std::int64_t>(x); }

inline void require_param(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Trees

inline MeasurePair closed_form_tree(std::size_t n) {
  detail::require_param(n >= 1, "tree order must be >= 1");
  return {ClosedFormValue::exactly(1), ClosedFormValue::exactly(n % 2 == 1 ? 0 : 1)};
}

// ---------------------------------------------------------------------------
// Complete graphs

enum class CompleteCase {
  even_offset,      // n = a^2 + 2t, 0 <= t <= a
  square_plus_one,  // n = a^2 + 1
  odd_offset,       // n = a^2 + 2t + 1, 1 <= t <= a - 1
};

/// How d1(K_n) is obtained: a = floor(sqrt n), the branch, and the number of
/// zeros k_star of a minimizing labelling.
struct CompleteDerivation {
  std::size_t n = 0;
  std::size_t a = 0;
  CompleteCase case_tag = CompleteCase::even_offset;
  std::size_t k_star = 0;
};

struct CompleteClosedForm {
  ClosedFormValue d1;
  ClosedFormValue d2;
  CompleteDerivation deriv;
};

namespace detail {

/// delta_v + delta_e for K_n with n - 2k = d.
inline std::int64_t complete_objective(std::int64_t n, std::int64_t d) {
  const std::int64_t q = d * d - n;
  return d + (q < 0 ? -q : q) / 2;
}

}  // namespace detail

inline CompleteClosedForm closed_form_complete(std::size_t order) {
  detail::require_param(order >= 1, "complete graph order must be >= 1");
  const std::int64_t n = detail::to_i64(order);
  const std::int64_t a = detail::isqrt(n);
  const std::int64_t offset = n - a * a;

  CompleteCase tag;
  std::int64_t d1;
  if (offset % 2 == 0) {
    tag = CompleteCase::even_offset;
    d1 = a + offset / 2;
  } else if (offset == 1) {
    tag = CompleteCase::square_plus_one;
    d1 = 2 * a - 1;
  } else {
    tag = CompleteCase::odd_offset;
    d1 = a + 1 + ((a + 1) * (a + 1) - n) / 2;
  }

  // Minimizer over d = n - 2k. Above sqrt(n) the objective increases in d, so
  // take the smallest d >= ceil(sqrt n) with d = n mod 2. Below sqrt(n) it
  // decreases, so take the largest d < sqrt(n) with the same parity. Ties go
  // to the smaller d.
  const bool square = offset == 0;
  const std::int64_t ceil_root = square ? a : a + 1;
  const std::int64_t upper = ceil_root % 2 == n % 2 ? ceil_root : ceil_root + 1;
  std::int64_t best_d = upper;
  const std::int64_t lower = square ? a - 2 : (a % 2 == n % 2 ? a : a - 1);
  if (lower >= 0 &&
      detail::complete_objective(n, lower) <= detail::complete_objective(n, upper))
    best_d = lower;

  if (detail::complete_objective(n, best_d) != d1)
    throw DefectError("complete-graph minimizer disagrees with the closed form at n = " +
                      std::to_string(n));

  CompleteDerivation deriv{order, static_cast<std::size_t>(a), tag,
                           static_cast<std::size_t>((n - best_d) / 2)};
  return {ClosedFormValue::exactly(d1), ClosedFormValue::exactly(n / 2), deriv};
}

// ---------------------------------------------------------------------------
// Complete multipartite graphs

/**
 * Bookkeeping for K_{n_1..n_r}. Odd parts are taken in order of appearance.
 *
 * d_vector / k_vector describe the labelling behind the d1 upper bound:
 * d_i = n_i - 2 k_i is -1 on the first ceil((s - floor(sqrt s)) / 2) odd
 * parts, +1 on the remaining odd parts and 0 on even parts.
 * balanced_k_vector / balanced_d_vector describe the d2 witness: k_i is
 * floor(n_i / 2) on the first q = floor(s / 2) odd parts and on even parts,
 * and floor(n_i / 2) + 1 on the other odd parts.
 */
struct MultipartiteDerivation {
  std::vector<std::size_t> parts;
  std::size_t s = 0;
  std::size_t a = 0;  // (2a)^2 <= s < (2a+2)^2
  std::size_t q = 0;
  std::vector<std::int64_t> d_vector;
  std::vector<std::size_t> k_vector;
  std::vector<std::int64_t> balanced_d_vector;
  std::vector<std::size_t> balanced_k_vector;
};

struct MultipartiteClosedForm {
  ClosedFormValue d1;
  ClosedFormValue d2;
  MultipartiteDerivation deriv;
};

/// Upper bound on d1 for non-square s realised by the d_vector labelling.
inline std::int64_t multipartite_case_bound(std::int64_t s) {
  const std::int64_t root = detail::isqrt(s);
  const std::int64_t a = root / 2;
  const std::int64_t lo_sq = (2 * a) * (2 * a), mid_sq = (2 * a + 1) * (2 * a + 1);
  const bool even = s % 2 == 0;
  std::int64_t base;
  if (lo_sq < s && s < mid_sq)
    base = even ? 2 * a - 1 : 2 * a - 2;
  else
    base = even ? 2 * a - 1 : 2 * a;
  return (s + 1 - base * base) / 2;
}

inline MultipartiteClosedForm closed_form_multipartite(const std::vector<std::size_t>& parts) {
  detail::require_param(!parts.empty(), "multipartite graphs need at least one part");
  for (std::size_t p : parts) detail::require_param(p >= 1, "every part must be >= 1");

  MultipartiteDerivation deriv;
  deriv.parts = parts;
  for (std::size_t p : parts) deriv.s += p % 2;
  const std::int64_t s = detail::to_i64(deriv.s);
  const std::int64_t root = detail::isqrt(s);
  deriv.a = static_cast<std::size_t>(root / 2);
  deriv.q = deriv.s / 2;

  const std::int64_t negatives = (s - root + 1) / 2;
  std::int64_t odd_seen = 0;
  for (std::size_t p : parts) {
    std::int64_t d = 0, bd = 0;
    std::size_t bk = p / 2;
    if (p % 2 == 1) {
      ++odd_seen;
      d = odd_seen <= negatives ? -1 : 1;
      if (odd_seen > detail::to_i64(deriv.q)) bk += 1;
      bd = detail::to_i64(p) - 2 * detail::to_i64(bk);
    }
    deriv.d_vector.push_back(d);
    deriv.k_vector.push_back(static_cast<std::size_t>((detail::to_i64(p) - d) / 2));
    deriv.balanced_d_vector.push_back(bd);
    deriv.balanced_k_vector.push_back(bk);
  }

  ClosedFormValue d1 = root * root == s
                           ? ClosedFormValue::exactly(root)
                           : ClosedFormValue::between(
                                 root, std::min(multipartite_case_bound(s), 3 * root));
  return {d1, ClosedFormValue::exactly(s / 2), std::move(deriv)};
}

// ---------------------------------------------------------------------------
// Cycles, wheels, fans

inline MeasurePair closed_form_cycle(std::size_t n) {
  detail::require_param(n >= 3, "cycle order must be >= 3");
  switch (n % 4) {
    case 0: return {ClosedFormValue::exactly(0), ClosedFormValue::exactly(0)};
    case 2: return {ClosedFormValue::exactly(2), ClosedFormValue::exactly(2)};
    default: return {ClosedFormValue::exactly(2), ClosedFormValue::exactly(1)};
  }
}

inline MeasurePair closed_form_wheel(std::size_t n) {
  detail::require_param(n >= 4, "wheel order must be >= 4");
  switch (n % 4) {
    case 0: return {ClosedFormValue::exactly(2), ClosedFormValue::exactly(2)};
    case 2: return {ClosedFormValue::exactly(0), ClosedFormValue::exactly(0)};
    default: return {ClosedFormValue::exactly(1), ClosedFormValue::exactly(0)};
  }
}

/// Fan F_{m,n}: m independent vertices joined to the path on n vertices.
inline MeasurePair closed_form_fan(std::size_t m, std::size_t n) {
  detail::require_param(m >= 1 && n >= 1, "fan parameters must satisfy m >= 1 and n >= 1");
  const bool m_odd = m % 2 == 1, n_odd = n % 2 == 1;
  return {ClosedFormValue::exactly(m_odd && !n_odd ? 2 : 1),
          ClosedFormValue::exactly(!m_odd && n_odd ? 0 : 1)};
}

// ---------------------------------------------------------------------------
// Joins

struct JoinBounds {
  std::int64_t d1_upper = 0;
  std::int64_t d2_upper = 0;
};

/// d1(G1+G2) <= d1(G1) d1(G2) + d1(G1) + d1(G2) and d2(G1+G2) <= d2(G1) + d2(G2) + 1.
inline JoinBounds join_upper_bounds(std::int64_t d1_g1, std::int64_t d1_g2, std::int64_t d2_g1,
                                    std::int64_t d2_g2) {
  return {d1_g1 * d1_g2 + d1_g1 + d1_g2, d2_g1 + d2_g2 + 1};
}

/// Sharper d2 bound: the +1 is only needed when both operands have odd order.
inline std::int64_t strict_join_d2_upper(std::int64_t d2_g1, std::int64_t d2_g2, std::size_t n1,
                                         std::size_t n2) {
  return d2_g1 + d2_g2 + ((n1 % 2 == 1 && n2 % 2 == 1) ? 1 : 0);
}

// ---------------------------------------------------------------------------
// Dispatch and explicit witnesses

/// Closed forms for every family except join.
inline MeasurePair closed_form(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::path: return closed_form_tree(p[0]);
    case Family::star: return closed_form_tree(p[0] + 1);
    case Family::complete: {
      auto c = closed_form_complete(p[0]);
      return {c.d1, c.d2};
    }
    case Family::multipartite: {
      auto c = closed_form_multipartite(p);
      return {c.d1, c.d2};
    }
    case Family::cycle: return closed_form_cycle(p[0]);
    case Family::wheel: return closed_form_wheel(p[0]);
    case Family::fan: return closed_form_fan(p[0], p[1]);
    case Family::join: break;
  }
  throw ParameterError("joins have bounds, not closed forms; use join_upper_bounds");
}

/// Which measure construct_witness attains for a family.
enum class WitnessRole { d1, d2, both };

inline WitnessRole witness_role(Family family) {
  switch (family) {
    case Family::complete: return WitnessRole::d1;
    case Family::multipartite: return WitnessRole::d2;
    default: return WitnessRole::both;
  }
}

/// Signed (v0 - v1, e0 - e1) the explicit construction produces, where the
/// family fixes it. Trees (sign of e0 - e1 varies) and joins give nullopt.
inline std::optional<std::pair<std::int64_t, std::int64_t>> claimed_imbalance(
    const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::cycle: {
      static constexpr std::int64_t v[] = {0, 1, 0, 1}, e[] = {0, 1, -2, -1};
      return std::pair{v[p[0] % 4], e[p[0] % 4]};
    }
    case Family::wheel: {
      static constexpr std::int64_t v[] = {0, -1, 0, 1}, e[] = {-2, 0, 0, 0};
      return std::pair{v[p[0] % 4], e[p[0] % 4]};
    }
    case Family::fan: {
      const std::size_t m = p[0], n = p[1];
      if (m % 2 == 0) {
        const std::int64_t vd = n % 2 == 0 ? 0 : (n % 4 == 1 ? 1 : -1);
        return std::pair{vd, std::int64_t{n % 2 == 0 ? -1 : 0}};
      }
      if (n % 2 == 1) return std::pair{std::int64_t{0}, std::int64_t{-1}};
      return std::pair{std::int64_t{n % 4 == 0 ? 1 : -1}, std::int64_t{-1}};
    }
    case Family::complete: {
      const auto c = closed_form_complete(p[0]);
      const std::int64_t d = detail::to_i64(p[0]) - 2 * detail::to_i64(c.deriv.k_star);
      return std::pair{-d, (d * d - detail::to_i64(p[0])) / 2};
    }
    case Family::multipartite: {
      const auto c = closed_form_multipartite(p);
      const auto s = detail::to_i64(c.deriv.s);
      return std::pair{s % 2, -(s / 2)};
    }
    default: return std::nullopt;
  }
}

namespace detail {

/// 0 on the first two of every four cycle vertices (counting from 1).
inline int cycle_pattern(std::size_t one_based) { return (one_based % 4 == 1 || one_based % 4 == 2) ? 0 : 1; }

inline Labelling build_witness(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.family) {
    case Family::path:
    case Family::star: return tree_optimal_labelling(generate(spec));
    case Family::complete: {
      const auto c = closed_form_complete(p[0]);
      Labelling f(p[0]);
      for (std::size_t v = c.deriv.k_star; v < p[0]; ++v) f.set(v, 1);
      return f;
    }
    case Family::multipartite: {
      const auto c = closed_form_multipartite(p);
      Labelling f(family_order(spec));
      std::size_t start = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = c.deriv.balanced_k_vector[i]; j < p[i]; ++j) f.set(start + j, 1);
        start += p[i];
      }
      return f;
    }
    case Family::cycle: {
      const std::size_t n = p[0];
      Labelling f(n);
      for (std::size_t i = 1; i <= n; ++i) f.set(i - 1, cycle_pattern(i));
      if (n % 4 == 2) f.set(n - 1, 1);
      return f;
    }
    case Family::wheel: {
      const std::size_t n = p[0];
      Labelling f(n);
      for (std::size_t i = 1; i < n; ++i) f.set(i - 1, cycle_pattern(i));
      f.set(n - 1, 1);
      return f;
    }
    case Family::fan: {
      const std::size_t m = p[0], n = p[1];
      Labelling f(m + n);
      for (std::size_t i = 1; i <= n; ++i) f.set(i - 1, (i % 4 == 0 || i % 4 == 1) ? 0 : 1);
      const std::size_t half_up = (m + 1) / 2;
      for (std::size_t i = 1; i <= m; ++i) {
        int l = i <= m / 2 ? 0 : 1;
        if (m % 2 == 1 && i == half_up) l = (n % 4 == 0 || n % 4 == 3) ? 0 : 1;
        f.set(n + i - 1, l);
      }
      return f;
    }
    case Family::join: break;
  }
  throw ParameterError("no explicit witness construction for joins");
}

}  // namespace detail

/**
 * The explicit labelling each family's result is built on: the two-leaf tree
 * construction, the minimizing k for K_n, the balanced multipartite
 * labelling, the 0,0,1,1 cycle pattern (last vertex flipped when n = 2 mod 4),
 * that pattern on the rim plus hub 1 for wheels, and the fan labelling.
 *
 * The labelling's statistics are checked against the closed form for its
 * WitnessRole and, where fixed, against claimed_imbalance(); a mismatch
 * raises DefectError.
 */
inline Labelling construct_witness(const FamilySpec& spec) {
  validate(spec);
  Labelling f = detail::build_witness(spec);
  const Graph g = generate(spec);
  const auto s = stats(g, f);
  const auto cf = closed_form(spec);
  const auto dv = detail::to_i64(s.delta_v), de = detail::to_i64(s.delta_e);

  bool ok = true;
  const WitnessRole role = witness_role(spec.family);
  if (role != WitnessRole::d2) ok = ok && cf.d1.is_exact() && dv + de == cf.d1.value();
  if (role != WitnessRole::d1) ok = ok && dv <= 1 && de == cf.d2.value();
  if (const auto claim = claimed_imbalance(spec)) {
    ok = ok && detail::to_i64(s.v0) - detail::to_i64(s.v1) == claim->first &&
         detail::to_i64(s.e0) - detail::to_i64(s.e1) == claim->second;
  }
  if (!ok)
    throw DefectError("witness for " + to_string(spec) + " has delta_v=" + std::to_string(dv) +
                      ", delta_e=" + std::to_string(de) + ", not the claimed values");
  return f;
}

}  // namespace cordial
