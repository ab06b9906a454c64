#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "cordial/errors.hpp"
#include "cordial/graph.hpp"

namespace cordial {

// ---------------------------------------------------------------------------
// graph6
//
// Header N(n): one byte 63+n for n <= 62; 126 followed by three 6-bit bytes
// for n <= 258047; 126 126 followed by six 6-bit bytes otherwise. Payload: the
// upper triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ..., six
// bits per byte, most significant first, each byte offset by 63, zero padded.

inline constexpr std::string_view kGraph6Prefix = ">>graph6<<";

namespace detail {

inline constexpr std::uint64_t kGraph6ShortMax = 62;
inline constexpr std::uint64_t kGraph6MediumMax = 258047;

inline std::uint64_t read_sextets(std::string_view bytes, std::size_t from, std::size_t count) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < count; ++i)
    v = (v << 6) | static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[from + i]) - 63);
  return v;
}

inline void write_sextets(std::string& out, std::uint64_t v, std::size_t count) {
  for (std::size_t i = count; i-- > 0;) out += static_cast<char>(63 + ((v >> (6 * i)) & 0x3F));
}

}  // namespace detail

/// Decodes one graph6 line (no trailing newline). Strict: rejects non-canonical
/// size headers, nonzero padding and any length mismatch.
inline Graph parse_graph6(std::string_view input) {
  std::size_t base = 0;
  if (input.starts_with(kGraph6Prefix)) base = kGraph6Prefix.size();
  const std::string_view bytes = input.substr(base);

  for (std::size_t i = 0; i < bytes.size(); ++i) {
    const auto c = static_cast<unsigned char>(bytes[i]);
    if (c < 63 || c > 126)
      throw MalformedInputError("graph6 byte " + std::to_string(c) + " outside [63,126]",
                                base + i);
  }
  if (bytes.empty()) throw LengthError("graph6 input is empty");

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (bytes[0] != 126) {
    n = static_cast<unsigned char>(bytes[0]) - 63u;
    pos = 1;
  } else if (bytes.size() >= 2 && bytes[1] == 126) {
    if (bytes.size() < 8) throw LengthError("graph6 8-byte size header is truncated");
    n = detail::read_sextets(bytes, 2, 6);
    pos = 8;
    if (n <= detail::kGraph6MediumMax)
      throw StrictnessError("graph6 8-byte header used for n = " + std::to_string(n));
  } else {
    if (bytes.size() < 4) throw LengthError("graph6 4-byte size header is truncated");
    n = detail::read_sextets(bytes, 1, 3);
    pos = 4;
    if (n <= detail::kGraph6ShortMax)
      throw StrictnessError("graph6 4-byte header used for n = " + std::to_string(n));
  }
  if (n > kMaxOrder)
    throw SizeError("graph6 order " + std::to_string(n) + " exceeds the limit of " +
                    std::to_string(kMaxOrder));

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t need = (bits + 5) / 6;
  const std::uint64_t have = bytes.size() - pos;
  if (have < need)
    throw LengthError("graph6 payload has " + std::to_string(have) + " bytes, expected " +
                      std::to_string(need));
  if (have > need)
    throw LengthError("graph6 payload has " + std::to_string(have - need) + " trailing bytes");

  GraphBuilder b(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const auto byte = static_cast<unsigned char>(bytes[pos + k / 6]) - 63u;
      if ((byte >> (5 - k % 6)) & 1u) b.add_edge(i, j);
    }
  if (need > 0) {
    const auto last = static_cast<unsigned char>(bytes[pos + need - 1]) - 63u;
    const std::uint64_t pad = need * 6 - bits;
    if (last & ((1u << pad) - 1u))
      throw StrictnessError("graph6 padding bits are not zero");
  }
  return std::move(b).build();
}

inline std::string write_graph6(const Graph& g) {
  const std::uint64_t n = g.vertex_count();
  std::string out;
  if (n <= detail::kGraph6ShortMax) {
    out += static_cast<char>(63 + n);
  } else if (n <= detail::kGraph6MediumMax) {
    out += static_cast<char>(126);
    detail::write_sextets(out, n, 3);
  } else {
    out += "\x7e\x7e";
    detail::write_sextets(out, n, 6);
  }
  unsigned acc = 0, filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out += static_cast<char>(63 + acc);
        acc = filled = 0;
      }
    }
  if (filled) out += static_cast<char>(63 + (acc << (6 - filled)));
  return out;
}

// ---------------------------------------------------------------------------
// Edge lists
//
//   # comment
//   n 4
//   0 1
//   1 2

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

inline std::optional<std::size_t> parse_index(std::string_view tok) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return v;
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  std::optional<GraphBuilder> builder;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = detail::split_ws(line);
    if (tokens.empty()) continue;

    if (!builder) {
      if (tokens.size() != 2 || tokens[0] != "n")
        throw SyntaxError("expected header 'n <count>'", line_no);
      const auto n = detail::parse_index(tokens[1]);
      if (!n) throw SyntaxError("vertex count '" + std::string(tokens[1]) + "' is not a number", line_no);
      builder.emplace(*n);
      continue;
    }
    if (tokens.size() != 2) throw SyntaxError("expected 'u v'", line_no);
    const auto u = detail::parse_index(tokens[0]);
    const auto v = detail::parse_index(tokens[1]);
    if (!u || !v) throw SyntaxError("edge endpoints must be nonnegative integers", line_no);
    const std::size_t n = builder->vertex_count();
    if (*u >= n || *v >= n)
      throw ValidationError("edge (" + std::to_string(*u) + ", " + std::to_string(*v) +
                                ") has an endpoint >= n = " + std::to_string(n),
                            line_no);
    if (*u == *v) throw ValidationError("self-loop at vertex " + std::to_string(*u), line_no);
    builder->add_edge(*u, *v);
  }
  if (!builder) throw SyntaxError("missing header 'n <count>'", line_no);
  return std::move(*builder).build();
}

inline std::string write_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

/// Edge list if the first meaningful line is a comment or "n <count>",
/// otherwise the first line is read as graph6.
inline Graph parse_graph_auto(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r' || text[i] == '\n')) ++i;
  const std::string_view rest = text.substr(i);
  const bool edge_list =
      rest.starts_with('#') ||
      (rest.size() >= 2 && rest[0] == 'n' && (rest[1] == ' ' || rest[1] == '\t'));
  if (edge_list) return parse_edge_list(text);
  std::string_view line = rest.substr(0, rest.find('\n'));
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  return parse_graph6(line);
}

// ---------------------------------------------------------------------------
// Result records

enum class RecordSource { exact, closed_form, both };

inline const char* source_name(RecordSource s) {
  switch (s) {
    case RecordSource::exact: return "exact";
    case RecordSource::closed_form: return "closed-form";
    case RecordSource::both: return "both";
  }
  return "?";
}

/// One row of a results table. d1_lower == d1 == d1_upper when d1 is exact.
struct ReportRecord {
  std::string family = "custom";
  std::string params;
  std::size_t n = 0;
  std::size_t m = 0;
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  std::int64_t d1_lower = 0;
  std::int64_t d1_upper = 0;
  std::string witness_d1;
  std::string witness_d2;
  bool cordial = false;
  RecordSource source = RecordSource::exact;
  std::uint64_t elapsed_ms = 0;
};

enum class RecordFormat { csv, json };

inline constexpr const char* kRecordFields[] = {
    "family",     "params",     "n",       "m",      "d1",        "d2",        "d1_lower",
    "d1_upper",   "witness_d1", "witness_d2", "cordial", "source", "elapsed_ms"};

namespace detail {

inline std::string csv_text(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// CSV: fixed header row, LF line endings, unquoted numbers. JSON: an array of
/// objects with keys in field order.
inline std::string write_records(const std::vector<ReportRecord>& records, RecordFormat format) {
  if (format == RecordFormat::csv) {
    std::string out;
    for (std::size_t i = 0; i < std::size(kRecordFields); ++i) {
      if (i) out += ',';
      out += kRecordFields[i];
    }
    out += '\n';
    for (const auto& r : records) {
      out += detail::csv_text(r.family) + ',' + detail::csv_text(r.params) + ',' +
             std::to_string(r.n) + ',' + std::to_string(r.m) + ',' + std::to_string(r.d1) + ',' +
             std::to_string(r.d2) + ',' + std::to_string(r.d1_lower) + ',' +
             std::to_string(r.d1_upper) + ',' + detail::csv_text(r.witness_d1) + ',' +
             detail::csv_text(r.witness_d2) + ',' + (r.cordial ? "true" : "false") + ',' +
             source_name(r.source) + ',' + std::to_string(r.elapsed_ms) + '\n';
    }
    return out;
  }

  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json o;
    o["family"] = r.family;
    o["params"] = r.params;
    o["n"] = r.n;
    o["m"] = r.m;
    o["d1"] = r.d1;
    o["d2"] = r.d2;
    o["d1_lower"] = r.d1_lower;
    o["d1_upper"] = r.d1_upper;
    o["witness_d1"] = r.witness_d1;
    o["witness_d2"] = r.witness_d2;
    o["cordial"] = r.cordial;
    o["source"] = source_name(r.source);
    o["elapsed_ms"] = r.elapsed_ms;
    array.push_back(std::move(o));
  }
  return array.dump(2) + "\n";
}

}  // namespace cordial
