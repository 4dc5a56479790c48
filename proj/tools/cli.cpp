#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <set>

#include "popstack/deterministic.hpp"
#include "popstack/emit.hpp"
#include "popstack/lab.hpp"
#include "popstack/nondeterministic.hpp"

namespace popstack::cli {

namespace {

struct Options {
  std::string machine = "popstack";
  std::optional<int> passes;
  std::optional<int> k;
  std::optional<int> n;
  std::string format;
  int jobs = default_jobs();
  bool count_only = false;
  bool series = false;
  bool sequence = false;
  bool list = false;
  std::string operand;
  std::string claim;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Format format_or(const Options& o, Format fallback) {
  return o.format.empty() ? fallback : parse_format(o.format);
}

int require_n(const Options& o) {
  if (!o.n) throw UsageError("--n is required");
  if (*o.n < 1) throw UsageError("--n must be at least 1");
  return *o.n;
}

// Binary-word operand for flip/tumble: either a 0/1 string, or, with --k,
// a permutation projected at threshold k.
BinaryWord word_operand(const Options& o) {
  if (o.k) return project(parse_permutation(o.operand), *o.k);
  return parse_binary_word(o.operand);
}

std::string run_sort(const Options& o) {
  const auto machine = parse_machine(o.machine);
  const int t = o.passes.value_or(1);
  if (t < 0) throw UsageError("--passes must be nonnegative");
  if (machine == Machine::tumble) {
    throw UsageError("tumble is nondeterministic; use reach");
  }
  if (machine == Machine::flip) {
    return iterate(machine, word_operand(o), t).states.back().to_string() + "\n";
  }
  TextStyle style{};
  const auto pi = parse_permutation(o.operand, style);
  const auto result = iterate(machine, pi, t).states.back();
  if (o.k) return project(result, *o.k).to_string() + "\n";
  return format_permutation(result, style) + "\n";
}

std::string run_trace(const Options& o) {
  const auto machine = parse_machine(o.machine);
  const auto format = format_or(o, Format::text);
  if (machine == Machine::tumble) {
    throw UsageError("tumble is nondeterministic; use reach");
  }
  if (o.passes && *o.passes < 0) throw UsageError("--passes must be nonnegative");
  if (machine == Machine::flip) {
    const auto w = word_operand(o);
    return emit(o.passes ? iterate(machine, w, *o.passes) : trace_to_sorted(machine, w),
                format);
  }
  TextStyle style{};
  const auto pi = parse_permutation(o.operand, style);
  auto trace = o.passes ? iterate(machine, pi, *o.passes) : trace_to_sorted(machine, pi);
  if (o.k) {
    PassTrace<BinaryWord> projected{trace.machine, {}, trace.sorted};
    for (const auto& s : trace.states) projected.states.push_back(project(s, *o.k));
    return emit(projected, format);
  }
  return emit(trace, format, style);
}

std::string run_reach(const Options& o) {
  const auto machine = parse_machine(o.machine);
  const auto format = format_or(o, Format::text);
  const int t = o.passes.value_or(1);
  if (t < 0) throw UsageError("--passes must be nonnegative");

  auto finish = [&](const auto& set, auto&&... style) {
    if (o.count_only) return std::to_string(set.size()) + "\n";
    return emit(set, format, style...);
  };

  if (!acts_on_permutations(machine)) {
    return finish(reach(word_operand(o), machine, t));
  }
  TextStyle style{};
  const auto pi = parse_permutation(o.operand, style);
  const auto set = reach(pi, machine, t);
  if (o.k) {
    ReachSet<BinaryWord> projected;
    for (const auto& x : set) projected.insert(project(x, *o.k));
    return finish(projected);
  }
  return finish(set, style);
}

std::string list_claims() {
  std::string out;
  for (const auto& c : claims()) {
    out += std::string(c.name) + " (default --n " + std::to_string(c.default_n) +
           "): " + std::string(c.summary) + "\n";
  }
  return out;
}

int run_verify(const Options& o, std::ostream& out) {
  if (o.list) {
    out << list_claims();
    return 0;
  }
  if (o.claim.empty()) throw UsageError("verify needs a claim name; see verify --list");
  const auto* info = find_claim(o.claim);
  if (info == nullptr) throw UsageError("unknown claim '" + o.claim + "'; see verify --list");
  const int n = o.n.value_or(info->default_n);
  const auto report = verify_claim(o.claim, n, o.jobs, Limits::from_environment());
  out << emit(report, format_or(o, Format::text));
  return report.passed() ? 0 : 1;
}

void check_cap(int n, int cap) {
  if (n > cap) {
    throw UsageError("--n " + std::to_string(n) + " exceeds the cap of " +
                     std::to_string(cap) + " (set POPSTACK_MAX_N to change it)");
  }
}

std::string run_count(const Options& o) {
  const auto machine = parse_machine(o.machine);
  if (!acts_on_permutations(machine)) throw UsageError("count needs --machine stack or popstack");
  const int n = require_n(o);
  const auto limits = Limits::from_environment();
  check_cap(n, o.series ? limits.nondet_n : limits.theorem_n);
  if (o.passes && *o.passes < 0) throw UsageError("--passes must be nonnegative");

  CountTable table;
  for (int m = 1; m <= n; ++m) {
    const int lo = o.passes ? *o.passes : 0;
    const int hi = o.passes ? *o.passes : m - 1;
    for (int t = lo; t <= hi; ++t) {
      const auto count = o.series ? count_series_sortable(m, t, machine, o.jobs)
                                  : count_west_t(m, t, machine, o.jobs);
      table.rows.push_back({m, t, machine, count});
    }
  }
  return emit(table, format_or(o, Format::csv));
}

std::string run_histogram(const Options& o) {
  const auto machine = parse_machine(o.machine);
  if (!acts_on_permutations(machine)) {
    throw UsageError("histogram needs --machine stack or popstack");
  }
  const int n = require_n(o);
  check_cap(n, Limits::from_environment().theorem_n);
  std::vector<PassHistogram> rows;
  if (o.sequence) {
    for (int m = 1; m <= n; ++m) {
      auto h = pass_histogram(m, machine, o.jobs);
      const int top = m - 1;
      rows.push_back({m, machine, {{top, h.counts[top]}}});
    }
  } else {
    rows.push_back(pass_histogram(n, machine, o.jobs));
  }
  return emit(rows, format_or(o, Format::csv));
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--machine", o.machine, "stack, popstack, flip or tumble");
  sub->add_option("--format", o.format, "text, json or csv");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pop-stack and stack sorting operators, relaxations, and verifiers"};
  app.require_subcommand(1);
  Options o;

  auto* sort = app.add_subcommand("sort", "Apply a deterministic operator");
  add_common(sort, o);
  sort->add_option("--passes", o.passes, "Number of passes (default 1)");
  sort->add_option("--k", o.k, "Project at threshold k");
  sort->add_option("operand", o.operand, "Permutation or binary word")->required();

  auto* trace = app.add_subcommand("trace", "Print every intermediate state");
  add_common(trace, o);
  trace->add_option("--passes", o.passes, "Number of passes (default: until sorted)");
  trace->add_option("--k", o.k, "Project every state at threshold k");
  trace->add_option("operand", o.operand, "Permutation or binary word")->required();

  auto* reach_cmd = app.add_subcommand("reach", "Outputs reachable by nondeterministic passes");
  add_common(reach_cmd, o);
  reach_cmd->add_option("--passes", o.passes, "Number of passes (default 1)");
  reach_cmd->add_option("--k", o.k, "Project at threshold k");
  reach_cmd->add_flag("--count-only", o.count_only, "Print only the cardinality");
  reach_cmd->add_option("operand", o.operand, "Permutation or binary word")->required();

  auto* verify = app.add_subcommand("verify", "Exhaustively check a claim");
  verify->add_option("claim", o.claim, "Claim name");
  verify->add_option("--n", o.n, "Size bound (meaning depends on the claim)");
  verify->add_option("--jobs", o.jobs, "Worker threads");
  verify->add_option("--format", o.format, "text or json");
  verify->add_flag("--list", o.list, "List the available claims");

  auto* count = app.add_subcommand("count", "Count sortable permutations");
  add_common(count, o);
  count->add_option("--n", o.n, "Largest length")->required();
  count->add_option("--passes", o.passes, "Pass bound (default: every t < n)");
  count->add_option("--jobs", o.jobs, "Worker threads");
  count->add_flag("--series", o.series, "Nondeterministic machines with queues in between");

  auto* histogram = app.add_subcommand("histogram", "Distribution of passes needed over S_n");
  add_common(histogram, o);
  histogram->add_option("--n", o.n, "Length")->required();
  histogram->add_option("--jobs", o.jobs, "Worker threads");
  histogram->add_flag("--sequence", o.sequence,
                      "Emit the max-pass count for every length up to n");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (o.jobs < 1) throw UsageError("--jobs must be at least 1");
    if (sort->parsed()) out << run_sort(o);
    else if (trace->parsed()) out << run_trace(o);
    else if (reach_cmd->parsed()) out << run_reach(o);
    else if (verify->parsed()) return run_verify(o, out);
    else if (count->parsed()) out << run_count(o);
    else if (histogram->parsed()) out << run_histogram(o);
    return 0;
  } catch (const TheoremViolation& e) {
    err << "internal theorem violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace popstack::cli
