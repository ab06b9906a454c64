#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cordial/cordial.hpp"
#include "oracle/naive_solver.hpp"

namespace {

using namespace cordial;

enum ExitCode : int { kOk = 0, kMismatch = 1, kParseFailure = 2, kCapacity = 3, kIo = 4 };

constexpr std::size_t kNaiveBenchCap = 24;
constexpr std::size_t kDefaultMaxOrder = 16;
constexpr std::size_t kJoinOperandMax = 8;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string family;
  std::optional<std::size_t> min_n, max_n, n, m;
  std::vector<std::size_t> parts;
  std::size_t total_max = 10;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string format;
  std::string out;
  std::string input;
  bool strict_join = false;
};

struct Instance {
  std::string family;
  std::string params;
  Graph graph;
  std::optional<FamilySpec> spec;
  std::optional<std::pair<Graph, Graph>> operands;
};

enum class Verdict { equal, in_interval, bound_held, mismatch };

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::equal: return "EQUAL";
    case Verdict::in_interval: return "IN-INTERVAL";
    case Verdict::bound_held: return "BOUND-HELD";
    case Verdict::mismatch: return "MISMATCH";
  }
  return "?";
}

struct Evaluation {
  ReportRecord record;
  std::string closed_d1;
  std::string closed_d2;
  Verdict verdict = Verdict::equal;
  std::string note;
};

// ---------------------------------------------------------------------------
// Instances

bool is_spec_text(const std::string& family) { return family.find_first_of(":(") != std::string::npos; }

std::size_t need(const std::optional<std::size_t>& v, const char* flag, const std::string& family) {
  if (!v) throw ParameterError(std::string(flag) + " is required for family " + family);
  return *v;
}

std::size_t family_min_order(Family f) {
  switch (f) {
    case Family::cycle: return 3;
    case Family::wheel: return 4;
    case Family::star: return 0;
    default: return 1;
  }
}

Instance spec_instance(const FamilySpec& spec) {
  validate(spec);
  Instance in;
  in.family = family_name(spec.family);
  in.params = to_string(spec);
  in.graph = generate(spec);
  in.spec = spec;
  if (spec.family == Family::join)
    in.operands = std::pair{generate(spec.operands[0]), generate(spec.operands[1])};
  return in;
}

Instance tree_instance(std::size_t n, std::uint64_t seed) {
  Instance in;
  in.family = "tree";
  in.params = "tree:" + std::to_string(n) + ";seed=" + std::to_string(seed);
  in.graph = random_tree(n, seed);
  return in;
}

Instance join_instance(Graph a, Graph b) {
  Instance in;
  in.family = "join";
  in.params = write_graph6(a) + "+" + write_graph6(b);
  in.graph = join(a, b);
  in.operands = std::pair{std::move(a), std::move(b)};
  return in;
}

/// Part lists with sum <= max_total, by total, each in non-increasing order.
void for_each_part_list(std::size_t max_total,
                        const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> parts;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t cap) {
    if (remaining == 0) {
      visit(parts);
      return;
    }
    for (std::size_t p = std::min(cap, remaining); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  for (std::size_t total = 1; total <= max_total; ++total) rec(total, total);
}

std::pair<std::size_t, std::size_t> order_range(const Config& cfg, std::size_t lo_default,
                                                std::size_t hi_default) {
  if (cfg.n) return {*cfg.n, *cfg.n};
  const std::size_t lo = cfg.min_n.value_or(lo_default), hi = cfg.max_n.value_or(hi_default);
  if (lo > hi) throw ParameterError("empty range: --min " + std::to_string(lo) + " exceeds --max " +
                                    std::to_string(hi));
  return {lo, hi};
}

/// The instance set for verify and sweep.
std::vector<Instance> enumerate_instances(const Config& cfg) {
  std::vector<Instance> out;
  if (is_spec_text(cfg.family)) {
    out.push_back(spec_instance(parse_family_spec(cfg.family)));
    return out;
  }
  if (cfg.family == "tree") {
    const auto [lo, hi] = order_range(cfg, 2, kDefaultMaxOrder);
    if (lo == 0) throw ParameterError("tree order must be >= 1");
    Rng rng(cfg.seed);
    for (std::size_t i = 0, k = cfg.samples.value_or(100); i < k; ++i) {
      const std::size_t n = uniform_between(rng, lo, hi);
      out.push_back(tree_instance(n, rng()));
    }
    return out;
  }
  if (cfg.family == "join") {
    Rng rng(cfg.seed);
    for (std::size_t i = 0, k = cfg.samples.value_or(200); i < k; ++i) {
      Graph a = random_graph(uniform_between(rng, 1, kJoinOperandMax), rng);
      Graph b = random_graph(uniform_between(rng, 1, kJoinOperandMax), rng);
      out.push_back(join_instance(std::move(a), std::move(b)));
    }
    return out;
  }

  const Family f = parse_family(cfg.family);
  switch (f) {
    case Family::fan: {
      const std::size_t m_max = cfg.m.value_or(5), n_max = cfg.n.value_or(8);
      for (std::size_t m = 1; m <= m_max; ++m)
        for (std::size_t n = 1; n <= n_max; ++n) out.push_back(spec_instance(FamilySpec::fan(m, n)));
      break;
    }
    case Family::multipartite:
      if (!cfg.parts.empty()) {
        out.push_back(spec_instance(FamilySpec::multipartite(cfg.parts)));
      } else {
        for_each_part_list(cfg.total_max, [&](const std::vector<std::size_t>& parts) {
          out.push_back(spec_instance(FamilySpec::multipartite(parts)));
        });
      }
      break;
    default: {
      const auto [lo, hi] = order_range(cfg, family_min_order(f), kDefaultMaxOrder);
      for (std::size_t n = lo; n <= hi; ++n) out.push_back(spec_instance(FamilySpec{f, {n}, {}}));
    }
  }
  return out;
}

/// The single instance for compute and bench.
Instance single_instance(const Config& cfg) {
  if (is_spec_text(cfg.family)) return spec_instance(parse_family_spec(cfg.family));
  if (cfg.family == "tree") return tree_instance(need(cfg.n, "--n", cfg.family), cfg.seed);
  const Family f = parse_family(cfg.family);
  switch (f) {
    case Family::fan:
      return spec_instance(FamilySpec::fan(need(cfg.m, "--m", cfg.family), need(cfg.n, "--n", cfg.family)));
    case Family::multipartite:
      if (cfg.parts.empty()) throw ParameterError("--parts is required for family multipartite");
      return spec_instance(FamilySpec::multipartite(cfg.parts));
    case Family::join:
      throw ParameterError("give join operands explicitly, e.g. --family 'join(cycle:4,complete:1)'");
    default: return spec_instance(FamilySpec{f, {need(cfg.n, "--n", cfg.family)}, {}});
  }
}

void require_capacity(const std::vector<Instance>& instances) {
  for (const auto& in : instances)
    if (in.graph.vertex_count() > kSolverCap)
      throw CapacityError(in.params + " has " + std::to_string(in.graph.vertex_count()) +
                          " vertices; exact solving is limited to " + std::to_string(kSolverCap));
}

// ---------------------------------------------------------------------------
// Evaluation

ReportRecord exact_record(const Graph& g, const ExactResult& r) {
  ReportRecord rec;
  rec.n = g.vertex_count();
  rec.m = g.edge_count();
  rec.d1 = static_cast<std::int64_t>(r.d1);
  rec.d2 = static_cast<std::int64_t>(r.d2);
  rec.d1_lower = rec.d1_upper = rec.d1;
  rec.witness_d1 = r.d1_witness.to_string();
  rec.witness_d2 = r.d2_witness.to_string();
  rec.cordial = r.cordial;
  rec.source = RecordSource::exact;
  return rec;
}

Evaluation evaluate(const Instance& in, const Config& cfg) {
  const SolveOptions opts{cfg.threads};
  const ExactResult r = solve_exact(in.graph, opts);
  Evaluation ev;
  ev.record = exact_record(in.graph, r);
  ev.record.family = in.family;
  ev.record.params = in.params;
  ev.record.source = RecordSource::both;
  const auto d1 = ev.record.d1, d2 = ev.record.d2;

  if (in.operands) {
    const auto& [a, b] = *in.operands;
    const auto ra = solve_exact(a, opts), rb = solve_exact(b, opts);
    const auto bounds = join_upper_bounds(ra.d1, rb.d1, ra.d2, rb.d2);
    const std::int64_t d2_bound = cfg.strict_join
                                      ? strict_join_d2_upper(ra.d2, rb.d2, a.vertex_count(), b.vertex_count())
                                      : bounds.d2_upper;
    ev.record.d1_lower = static_cast<std::int64_t>((ev.record.n + ev.record.m) % 2);
    ev.record.d1_upper = bounds.d1_upper;
    ev.closed_d1 = "<=" + std::to_string(bounds.d1_upper);
    ev.closed_d2 = "<=" + std::to_string(d2_bound);
    ev.verdict = d1 <= bounds.d1_upper && d2 <= d2_bound ? Verdict::bound_held : Verdict::mismatch;
    return ev;
  }

  MeasurePair cf;
  try {
    if (in.spec) {
      cf = closed_form(*in.spec);
      construct_witness(*in.spec);
    } else {
      cf = closed_form_tree(in.graph.vertex_count());
      tree_optimal_labelling(in.graph);
    }
  } catch (const DefectError& e) {
    ev.verdict = Verdict::mismatch;
    ev.note = e.what();
  }
  ev.record.d1_lower = cf.d1.lo;
  ev.record.d1_upper = cf.d1.hi;
  ev.closed_d1 = cf.d1.to_string();
  ev.closed_d2 = cf.d2.to_string();
  if (ev.verdict == Verdict::mismatch) return ev;
  if (!cf.d1.contains(d1) || !cf.d2.contains(d2))
    ev.verdict = Verdict::mismatch;
  else if (!cf.d1.is_exact())
    ev.verdict = Verdict::in_interval;
  return ev;
}

// ---------------------------------------------------------------------------
// Output

std::string format_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += row[i];
      if (i + 1 < row.size()) out.append(width[i] - row[i].size() + 2, ' ');
    }
    out += '\n';
  }
  return out;
}

RecordFormat record_format(const std::string& format) {
  if (format == "json") return RecordFormat::json;
  return RecordFormat::csv;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open output file '" + path + "'");
  f << text;
  f.flush();
  if (!f) throw IoError("failed writing output file '" + path + "'");
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open input file '" + path + "'");
  std::string text{std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
  if (f.bad()) throw IoError("failed reading input file '" + path + "'");
  return text;
}

std::string run_header(const char* command, const Config& cfg) {
  std::string h = std::string("# ") + command + " family=" + cfg.family + " prng=" + kRngName +
                  " seed=" + std::to_string(cfg.seed);
  if (cfg.strict_join) h += " strict-join";
  return h + "\n";
}

// ---------------------------------------------------------------------------
// Commands

int run_compute(const Config& cfg, std::string& out) {
  std::optional<Instance> in;
  if (!cfg.family.empty()) {
    in = single_instance(cfg);
  } else {
    in.emplace();
    in->family = "custom";
    in->graph = parse_graph_auto(read_input(cfg.input));
  }
  if (in->graph.vertex_count() == 0) throw CapacityError("the input graph has no vertices");
  require_capacity({*in});

  const auto start = std::chrono::steady_clock::now();
  Evaluation ev;
  if (in->family == "custom") {
    ev.record = exact_record(in->graph, solve_exact(in->graph, {cfg.threads}));
  } else {
    ev = evaluate(*in, cfg);
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  ev.record.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());

  const auto& r = ev.record;
  if (cfg.format == "csv" || cfg.format == "json") {
    out = write_records({r}, record_format(cfg.format));
  } else {
    std::ostringstream s;
    s << "graph: " << (r.params.empty() ? r.family : r.params) << "\n"
      << "n: " << r.n << "\n"
      << "m: " << r.m << "\n"
      << "d1: " << r.d1 << "\n"
      << "d2: " << r.d2 << "\n"
      << "witness_d1: " << r.witness_d1 << "\n"
      << "witness_d2: " << r.witness_d2 << "\n"
      << "cordial: " << (r.cordial ? "true" : "false") << "\n";
    if (!ev.closed_d1.empty())
      s << "closed_form: d1 " << ev.closed_d1 << ", d2 " << ev.closed_d2 << " (" << verdict_name(ev.verdict)
        << ")\n";
    s << "elapsed_ms: " << r.elapsed_ms << "\n";
    out = s.str();
  }
  return ev.verdict == Verdict::mismatch ? kMismatch : kOk;
}

int run_verify(const Config& cfg, std::string& out) {
  const auto instances = enumerate_instances(cfg);
  require_capacity(instances);

  std::vector<Evaluation> evals;
  evals.reserve(instances.size());
  for (const auto& in : instances) evals.push_back(evaluate(in, cfg));

  bool failed = false;
  for (const auto& ev : evals) failed = failed || ev.verdict == Verdict::mismatch;

  if (cfg.format == "csv" || cfg.format == "json") {
    std::vector<ReportRecord> records;
    for (const auto& ev : evals) records.push_back(ev.record);
    out = write_records(records, record_format(cfg.format));
    return failed ? kMismatch : kOk;
  }

  std::vector<std::vector<std::string>> rows = {
      {"family", "params", "closed_d1", "closed_d2", "exact_d1", "exact_d2", "verdict"}};
  std::size_t counts[4] = {};
  std::string notes;
  for (const auto& ev : evals) {
    const auto& r = ev.record;
    rows.push_back({r.family, r.params, ev.closed_d1, ev.closed_d2, std::to_string(r.d1),
                    std::to_string(r.d2), verdict_name(ev.verdict)});
    ++counts[static_cast<int>(ev.verdict)];
    if (!ev.note.empty()) notes += "# note: " + r.params + ": " + ev.note + "\n";
  }
  std::ostringstream summary;
  summary << "# " << evals.size() << " instances: " << counts[0] << " EQUAL, " << counts[1]
          << " IN-INTERVAL, " << counts[2] << " BOUND-HELD, " << counts[3] << " MISMATCH\n";
  out = run_header("verify", cfg) + format_table(rows) + notes + summary.str();
  return failed ? kMismatch : kOk;
}

int run_sweep(const Config& cfg, std::string& out) {
  if (cfg.format == "text") throw ParameterError("sweep writes csv or json");
  const auto instances = enumerate_instances(cfg);
  require_capacity(instances);
  std::vector<ReportRecord> records;
  records.reserve(instances.size());
  bool failed = false;
  for (const auto& in : instances) {
    auto ev = evaluate(in, cfg);
    failed = failed || ev.verdict == Verdict::mismatch;
    if (ev.verdict == Verdict::mismatch)
      std::cerr << "warning: " << in.params << " disagrees with its closed form\n";
    records.push_back(std::move(ev.record));
  }
  out = write_records(records, record_format(cfg.format));
  return failed ? kMismatch : kOk;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string scientific(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

int run_bench(const Config& cfg, std::string& out) {
  const Instance in = single_instance(cfg);
  require_capacity({in});
  const Graph& g = in.graph;
  const std::size_t n = g.vertex_count();
  if (n == 0) throw CapacityError("the graph has no vertices");

  auto start = std::chrono::steady_clock::now();
  const ExactResult gray = solve_exact(g, {cfg.threads});
  const double gray_s = seconds_since(start);

  std::ostringstream s;
  s << "# bench " << in.params << " n=" << n << " m=" << g.edge_count() << " threads=" << cfg.threads
    << "\n";
  std::vector<std::vector<std::string>> rows = {
      {"engine", "labellings", "elapsed_ms", "labellings_per_s"},
      {"gray", std::to_string(gray.labellings_visited), fixed(gray_s * 1e3, 3),
       scientific(static_cast<double>(gray.labellings_visited) / std::max(gray_s, 1e-9))}};

  bool identical = true;
  std::string tail;
  if (n <= kNaiveBenchCap) {
    start = std::chrono::steady_clock::now();
    const auto naive = oracle::naive_solve(g);
    const double naive_s = seconds_since(start);
    rows.push_back({"naive", std::to_string(naive.labellings_visited), fixed(naive_s * 1e3, 3),
                    scientific(static_cast<double>(naive.labellings_visited) / std::max(naive_s, 1e-9))});
    identical = naive.d1 == gray.d1 && naive.d2 == gray.d2 && naive.d1_witness == gray.d1_witness &&
                naive.d2_witness == gray.d2_witness;
    tail = "speedup: " + fixed(naive_s / std::max(gray_s, 1e-9), 1) + "x\n";
  } else {
    rows.push_back({"naive", "skipped (n > " + std::to_string(kNaiveBenchCap) + ")", "-", "-"});
  }
  s << format_table(rows) << "d1: " << gray.d1 << "\nd2: " << gray.d2 << "\n";
  if (n <= kNaiveBenchCap) s << "identical: " << (identical ? "yes" : "no") << "\n" << tail;
  out = s.str();
  return identical ? kOk : kMismatch;
}

int report(int code, const std::exception& e) {
  std::cerr << "error: " << e.what() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and closed-form cordial labelling measures"};
  app.require_subcommand(1, 1);
  Config cfg;

  const std::vector<std::string> formats = {"text", "csv", "json"};
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "Worker threads for the exact solver")
        ->check(CLI::Range(1u, 1024u));
    sub->add_option("--format", cfg.format, "Output format: text, csv or json")
        ->check(CLI::IsMember(formats));
    sub->add_option("--out", cfg.out, "Write output to FILE instead of stdout");
  };
  auto add_family = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--family", cfg.family,
                                "Family name (path, cycle, complete, star, multipartite, wheel, fan, "
                                "join, tree) or a full spec such as 'fan:2,3'");
    if (required) opt->required();
    sub->add_option("--n", cfg.n, "Order n (fan: path length, or the grid bound in verify/sweep)");
    sub->add_option("--m", cfg.m, "Fan independent-set size (grid bound in verify/sweep)");
    sub->add_option("--parts", cfg.parts, "Multipartite part sizes, comma separated")->delimiter(',');
    sub->add_option("--seed", cfg.seed, "Seed for random trees and join operands");
  };
  auto add_ranges = [&](CLI::App* sub) {
    sub->add_option("--min", cfg.min_n, "Smallest order in the range");
    sub->add_option("--max", cfg.max_n, "Largest order in the range");
    sub->add_option("--total-max", cfg.total_max, "Largest multipartite total order");
    sub->add_option("--samples", cfg.samples, "Number of random trees or join pairs");
    sub->add_flag("--strict-join", cfg.strict_join,
                  "Use the parity-dependent d2 bound for joins (+1 only when both orders are odd)");
  };

  auto* compute = app.add_subcommand("compute", "Exact d1, d2 and witnesses for one graph");
  compute->add_option("--input", cfg.input, "graph6 or edge-list file (default: stdin)");
  add_family(compute, false);
  add_output(compute);

  auto* verify = app.add_subcommand("verify", "Compare closed forms with exhaustive search");
  add_family(verify, true);
  add_ranges(verify);
  add_output(verify);

  auto* sweep = app.add_subcommand("sweep", "Write one record per instance as CSV or JSON");
  add_family(sweep, true);
  add_ranges(sweep);
  add_output(sweep);

  auto* bench = app.add_subcommand("bench", "Time the Gray-code engine against the naive solver");
  add_family(bench, true);
  add_output(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParseFailure;
  }

  if (compute->count() && !cfg.family.empty() && !cfg.input.empty()) {
    std::cerr << "error: give either --input or --family, not both\n";
    return kParseFailure;
  }

  try {
    std::string text;
    int status = kOk;
    if (compute->parsed())
      status = run_compute(cfg, text);
    else if (verify->parsed())
      status = run_verify(cfg, text);
    else if (sweep->parsed())
      status = run_sweep(cfg, text);
    else
      status = run_bench(cfg, text);
    emit(cfg.out, text);
    return status;
  } catch (const CapacityError& e) {
    return report(kCapacity, e);
  } catch (const cordial::ParseError& e) {
    return report(kParseFailure, e);
  } catch (const ParameterError& e) {
    return report(kParseFailure, e);
  } catch (const SizeError& e) {
    return report(kParseFailure, e);
  } catch (const IoError& e) {
    return report(kIo, e);
  } catch (const std::exception& e) {
    return report(kMismatch, e);
  }
}
