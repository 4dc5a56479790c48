#include "popstack/lab.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <exception>
#include <stdexcept>

#include "popstack/deterministic.hpp"
#include "popstack/kernels.hpp"
#include "popstack/nondeterministic.hpp"
#include "popstack/reference.hpp"

namespace popstack {

void VerificationReport::record_failure(std::string instance) {
  ++failure_count;
  if (failures.size() < kMaxRecordedFailures) failures.push_back(std::move(instance));
}

void VerificationReport::merge(const VerificationReport& other) {
  checked += other.checked;
  failure_count += other.failure_count;
  for (const auto& f : other.failures) {
    if (failures.size() >= kMaxRecordedFailures) break;
    failures.push_back(f);
  }
}

std::uint64_t PassHistogram::total() const {
  std::uint64_t sum = 0;
  for (const auto& [_, c] : counts) sum += c;
  return sum;
}

int PassHistogram::max_occupied() const {
  int best = -1;
  for (const auto& [k, c] : counts) {
    if (c > 0) best = std::max(best, k);
  }
  return best;
}

Limits Limits::from_environment() {
  Limits limits;
  const char* raw = std::getenv("POPSTACK_MAX_N");
  if (raw == nullptr || *raw == '\0') return limits;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v < 1) {
    throw std::invalid_argument(std::string("POPSTACK_MAX_N must be a positive integer, got '") +
                                raw + "'");
  }
  const int value = static_cast<int>(std::min<long>(v, kMaxStreamLength));
  limits.theorem_n = value;
  limits.projection_n = value;
  limits.nondet_n = std::min(value, kMaxMaterializedLength);
  return limits;
}

int default_jobs() { return std::max(1, omp_get_max_threads()); }

namespace {

std::string perm_text(std::span<const Entry> entries) {
  return format_permutation(Permutation::unchecked({entries.begin(), entries.end()}));
}

std::string scope_n(int n) { return "n = " + std::to_string(n); }
std::string scope_len(int max_len) { return "length <= " + std::to_string(max_len); }

void require_length(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw std::out_of_range(std::string(what) + " " + std::to_string(n) +
                            " outside " + std::to_string(lo) + ".." +
                            std::to_string(hi));
  }
}

void require_permutation_machine(Machine m) {
  if (!acts_on_permutations(m)) {
    throw std::invalid_argument("machine '" + std::string(to_string(m)) +
                                "' does not act on permutations");
  }
}

// Runs fn(c) for c in [0, chunks) on up to `jobs` threads. Exceptions are
// captured per chunk and the first one (in chunk order) rethrown.
template <class Part, class Fn>
std::vector<Part> run_chunks(int chunks, int jobs, Fn fn) {
  std::vector<Part> parts(static_cast<std::size_t>(chunks));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(jobs, 1))
  for (int c = 0; c < chunks; ++c) {
    try {
      parts[c] = fn(c);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return parts;
}

// One chunk per first entry.
template <class PerPerm>
VerificationReport sweep_permutations(const std::string& claim, int n, int jobs,
                                      PerPerm per_perm) {
  auto parts = run_chunks<VerificationReport>(n, jobs, [&](int c) {
    VerificationReport part;
    kernel::for_each_permutation(n, c + 1, [&](std::span<const Entry> pi) {
      per_perm(pi, part);
    });
    return part;
  });
  VerificationReport report{claim, scope_n(n)};
  for (const auto& p : parts) report.merge(p);
  return report;
}

struct WordChunk {
  int length;
  std::uint64_t first, last;  // mask range [first, last)
};

constexpr std::uint64_t kWordsPerChunk = 256;

std::vector<WordChunk> word_chunks(int max_len) {
  std::vector<WordChunk> chunks;
  for (int len = 1; len <= max_len; ++len) {
    const std::uint64_t total = std::uint64_t{1} << len;
    for (std::uint64_t m = 0; m < total; m += kWordsPerChunk) {
      chunks.push_back({len, m, std::min(total, m + kWordsPerChunk)});
    }
  }
  return chunks;
}

template <class PerWord>
VerificationReport sweep_words(const std::string& claim, int max_len, int jobs,
                               PerWord per_word) {
  const auto chunks = word_chunks(max_len);
  auto parts = run_chunks<VerificationReport>(
      static_cast<int>(chunks.size()), jobs, [&](int c) {
        VerificationReport part;
        const auto& ch = chunks[c];
        for (auto m = ch.first; m < ch.last; ++m) per_word(ch.length, m, part);
        return part;
      });
  VerificationReport report{claim, scope_len(max_len)};
  for (const auto& p : parts) report.merge(p);
  return report;
}

// Flip-monotonicity check for one u against every same-length v with the
// same number of zeros.
void check_flip_monotone(int len, std::uint64_t u_mask, VerificationReport& part) {
  const auto u = BinaryWord::from_mask(u_mask, len);
  const auto fu = flip_pass(u);
  const auto ones = std::popcount(u_mask);
  const std::uint64_t total = std::uint64_t{1} << len;
  for (std::uint64_t v_mask = 0; v_mask < total; ++v_mask) {
    if (std::popcount(v_mask) != ones) continue;
    const auto v = BinaryWord::from_mask(v_mask, len);
    if (!zero_order_leq(u, v)) continue;
    ++part.checked;
    const auto fv = flip_pass(v);
    if (!zero_order_leq(fu, fv)) {
      part.record_failure("u=" + u.to_string() + " v=" + v.to_string() +
                          " F(u)=" + fu.to_string() + " F(v)=" + fv.to_string());
    }
  }
}

void check_worst_tumble(const BinaryWord& w, VerificationReport& part) {
  const auto f = flip_pass(w);
  const auto tumbles = tumble_set(w);
  ++part.checked;
  if (!tumbles.contains(f)) {
    part.record_failure("w=" + w.to_string() + " F(w)=" + f.to_string() +
                        " not in T(w)");
  }
  for (const auto& u : tumbles) {
    ++part.checked;
    if (!zero_order_leq(u, f)) {
      part.record_failure("w=" + w.to_string() + " u=" + u.to_string() +
                          " not <= F(w)=" + f.to_string());
    }
  }
}

void check_projection(const Permutation& pi, const Permutation& popped,
                      VerificationReport& part) {
  const int n = static_cast<int>(pi.size());
  for (int k = 0; k <= n; ++k) {
    ++part.checked;
    const auto image = project(popped, k);
    if (!tumble_set(project(pi, k)).contains(image)) {
      part.record_failure("pi=" + format_permutation(pi) + " k=" + std::to_string(k) +
                          " P(pi)|k=" + image.to_string());
    }
  }
}

const Pattern k231{Permutation::unchecked({2, 3, 1})};
const Pattern k312{Permutation::unchecked({3, 1, 2})};

}  // namespace

VerificationReport verify_theorem(int n, int jobs) {
  require_length(n, 1, kMaxStreamLength, "length");
  const auto un = static_cast<std::size_t>(n);
  struct Part {
    VerificationReport report;
    int max_passes = 0;
  };
  auto parts = run_chunks<Part>(n, jobs, [&](int c) {
    Part part;
    std::vector<Entry> a(un), b(un), scratch(un);
    kernel::for_each_permutation(n, c + 1, [&](std::span<const Entry> pi) {
      std::copy(pi.begin(), pi.end(), a.begin());
      int t = 0;
      while (t < n - 1 && !is_identity(a)) {
        kernel::pop_stack_pass(a, b, scratch);
        std::swap(a, b);
        ++t;
      }
      ++part.report.checked;
      if (!is_identity(a)) {
        part.report.record_failure("pi=" + perm_text(pi) + " P^" +
                                   std::to_string(n - 1) + "(pi)=" + perm_text(a));
      }
      part.max_passes = std::max(part.max_passes, t);
    });
    return part;
  });
  VerificationReport report{"theorem", scope_n(n)};
  int max_passes = 0;
  for (const auto& p : parts) {
    report.merge(p.report);
    max_passes = std::max(max_passes, p.max_passes);
  }
  if (n >= 2) {
    ++report.checked;
    if (max_passes != n - 1) {
      report.record_failure("no permutation of length " + std::to_string(n) +
                            " needs " + std::to_string(n - 1) + " passes (max " +
                            std::to_string(max_passes) + ")");
    }
  }
  return report;
}

VerificationReport verify_tightness(int max_n) {
  require_length(max_n, 2, kMaxStreamLength, "length");
  VerificationReport report{"tightness", "2 <= n <= " + std::to_string(max_n)};
  for (int n = 2; n <= max_n; ++n) {
    std::vector<Entry> e(static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i) e[i] = i + 2;
    e.back() = 1;
    const auto witness = Permutation::unchecked(std::move(e));
    ++report.checked;
    try {
      const int t = passes_to_sort(witness, Machine::popstack);
      if (t != n - 1) {
        report.record_failure("pi=" + format_permutation(witness) + " passes=" +
                              std::to_string(t));
      }
    } catch (const TheoremViolation& err) {
      report.record_failure("pi=" + format_permutation(witness) + " " + err.what());
    }
  }
  return report;
}

VerificationReport verify_projection_tumble(int n, int jobs) {
  require_length(n, 1, kMaxStreamLength, "length");
  const auto un = static_cast<std::size_t>(n);
  return sweep_permutations("projection-tumble", n, jobs,
                            [&](std::span<const Entry> pi, VerificationReport& part) {
                              std::vector<Entry> out(un), scratch(un);
                              kernel::pop_stack_pass(pi, out, scratch);
                              check_projection(Permutation::unchecked({pi.begin(), pi.end()}),
                                               Permutation::unchecked(std::move(out)), part);
                            });
}

VerificationReport verify_projection_iterated(int n, int jobs) {
  require_length(n, 1, kMaxStreamLength, "length");
  // Tumble reach sets per word, indexed by mask then by pass count.
  const std::uint64_t words = std::uint64_t{1} << n;
  std::vector<std::vector<ReachSet<BinaryWord>>> reach_by_word(words);
  for (std::uint64_t m = 0; m < words; ++m) {
    auto& layers = reach_by_word[m];
    layers.push_back({BinaryWord::from_mask(m, n)});
    for (int t = 1; t < n; ++t) {
      ReachSet<BinaryWord> next;
      for (const auto& w : layers.back()) next.merge(tumble_set(w));
      layers.push_back(std::move(next));
    }
  }
  auto mask_of = [](const BinaryWord& w) {
    std::uint64_t m = 0;
    for (auto b : w.bits()) m = (m << 1) | b;
    return m;
  };
  return sweep_permutations(
      "projection-iterated", n, jobs, [&](std::span<const Entry> raw, VerificationReport& part) {
        const auto pi = Permutation::unchecked({raw.begin(), raw.end()});
        const auto trace = iterate(Machine::popstack, pi, n - 1);
        for (int k = 0; k <= n; ++k) {
          const auto& layers = reach_by_word[mask_of(project(pi, k))];
          for (int t = 0; t < n; ++t) {
            ++part.checked;
            const auto image = project(trace.states[t], k);
            if (!layers[t].contains(image)) {
              part.record_failure("pi=" + format_permutation(pi) + " k=" +
                                  std::to_string(k) + " t=" + std::to_string(t) +
                                  " P^t(pi)|k=" + image.to_string());
            }
          }
        }
      });
}

VerificationReport verify_flip_monotone(int max_len, int jobs) {
  require_length(max_len, 1, 20, "word length");
  return sweep_words("flip-monotone", max_len, jobs, check_flip_monotone);
}

int staircase_flip_count(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("staircase needs a >= 1 and b >= 1");
  return passes_to_sort(BinaryWord::staircase(static_cast<std::size_t>(b),
                                              static_cast<std::size_t>(a)),
                        Machine::flip);
}

VerificationReport verify_staircase(int max_ab) {
  require_length(max_ab, 1, 64, "staircase bound");
  VerificationReport report{"staircase", "1 <= a, b <= " + std::to_string(max_ab)};
  for (int a = 1; a <= max_ab; ++a) {
    for (int b = 1; b <= max_ab; ++b) {
      ++report.checked;
      try {
        const int t = staircase_flip_count(a, b);
        if (t != a + b - 1) {
          report.record_failure("a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                " flips=" + std::to_string(t));
        }
      } catch (const TheoremViolation& err) {
        report.record_failure("a=" + std::to_string(a) + " b=" + std::to_string(b) +
                              " " + err.what());
      }
    }
  }
  return report;
}

VerificationReport verify_worst_tumble(int max_len, int jobs) {
  require_length(max_len, 1, 20, "word length");
  return sweep_words("worst-tumble", max_len, jobs,
                     [](int len, std::uint64_t m, VerificationReport& part) {
                       check_worst_tumble(BinaryWord::from_mask(m, len), part);
                     });
}

VerificationReport verify_characterizations(int n, int jobs) {
  require_length(n, 1, kMaxStreamLength, "length");
  const auto un = static_cast<std::size_t>(n);
  return sweep_permutations(
      "characterization", n, jobs, [&](std::span<const Entry> raw, VerificationReport& part) {
        std::vector<Entry> out(un), scratch(un);
        const auto pi = Permutation::unchecked({raw.begin(), raw.end()});
        const bool no231 = avoids(pi, k231);
        const bool no312 = avoids(pi, k312);

        kernel::stack_pass(raw, out, scratch);
        ++part.checked;
        if (is_identity(out) != no231) {
          part.record_failure("pi=" + format_permutation(pi) + " stack-sorted=" +
                              (is_identity(out) ? "yes" : "no") + " avoids231=" +
                              (no231 ? "yes" : "no"));
        }
        kernel::pop_stack_pass(raw, out, scratch);
        ++part.checked;
        if (is_identity(out) != (no231 && no312)) {
          part.record_failure("pi=" + format_permutation(pi) + " popstack-sorted=" +
                              (is_identity(out) ? "yes" : "no") + " layered=" +
                              (no231 && no312 ? "yes" : "no"));
        }
      });
}

VerificationReport verify_canonical_optimality(int n, int jobs) {
  require_length(n, 1, kMaxMaterializedLength, "length");
  return sweep_permutations(
      "canonical-optimality", n, jobs, [&](std::span<const Entry> raw, VerificationReport& part) {
        const auto pi = Permutation::unchecked({raw.begin(), raw.end()});
        const auto id = Permutation::identity(pi.size());
        ++part.checked;
        if (pop_stack_outputs(pi).contains(id) != pop_stack_pass(pi).is_identity()) {
          part.record_failure("pi=" + format_permutation(pi) + " machine=popstack");
        }
        ++part.checked;
        if (stack_outputs(pi).contains(id) != stack_pass(pi).is_identity()) {
          part.record_failure("pi=" + format_permutation(pi) + " machine=stack");
        }
      });
}

VerificationReport verify_simulation_oracles(int n, int jobs) {
  require_length(n, 1, kMaxStreamLength, "length");
  return sweep_permutations(
      "simulation-oracle", n, jobs, [&](std::span<const Entry> raw, VerificationReport& part) {
        const auto pi = Permutation::unchecked({raw.begin(), raw.end()});
        ++part.checked;
        if (stack_pass(pi) != reference::stack_pass_recursive(pi)) {
          part.record_failure("pi=" + format_permutation(pi) + " machine=stack");
        }
        ++part.checked;
        if (pop_stack_pass(pi) != reference::pop_stack_pass_by_runs(pi)) {
          part.record_failure("pi=" + format_permutation(pi) + " machine=popstack");
        }
      });
}

VerificationReport verify_tumble_oracle(int max_len, int jobs) {
  require_length(max_len, 1, 20, "word length");
  return sweep_words("tumble-oracle", max_len, jobs,
                     [](int len, std::uint64_t m, VerificationReport& part) {
                       const auto w = BinaryWord::from_mask(m, len);
                       const auto fast = tumble_set(w);
                       ++part.checked;
                       if (fast != reference::tumble_set_naive(w) ||
                           fast.size() != tumble_set_size(w)) {
                         part.record_failure("w=" + w.to_string());
                       }
                     });
}

VerificationReport verify_histogram(int n, int jobs) {
  require_length(n, 1, kMaxStreamLength, "length");
  VerificationReport report{"histogram", scope_n(n)};
  PassHistogram h;
  try {
    h = pass_histogram(n, Machine::popstack, jobs);
  } catch (const TheoremViolation& err) {
    report.checked = 1;
    report.record_failure(err.what());
    return report;
  }
  report.checked = 3;
  if (h.total() != factorial(n)) {
    report.record_failure("sum " + std::to_string(h.total()) + " != " +
                          std::to_string(factorial(n)));
  }
  const int expected_max = n >= 2 ? n - 1 : 0;
  if (h.max_occupied() != expected_max) {
    report.record_failure("max occupied key " + std::to_string(h.max_occupied()) +
                          " != " + std::to_string(expected_max));
  }
  for (const auto& [k, c] : h.counts) {
    if (k >= n && c > 0) report.record_failure("key " + std::to_string(k) + " occupied");
  }
  return report;
}

VerificationReport verify_west2(int n, int jobs) {
  require_length(n, 1, kMaxStreamLength, "length");
  VerificationReport report{"west2", scope_n(n)};
  report.checked = 1;
  const auto brute = count_west_t(n, 2, Machine::stack, jobs);
  const auto formula = west2_formula(n);
  if (BigInt(brute) != formula) {
    report.record_failure("n=" + std::to_string(n) + " brute=" + std::to_string(brute) +
                          " formula=" + formula.str());
  }
  return report;
}

PassHistogram pass_histogram(int n, Machine machine, int jobs) {
  require_length(n, 1, kMaxStreamLength, "length");
  require_permutation_machine(machine);
  const auto un = static_cast<std::size_t>(n);
  auto parts = run_chunks<std::vector<std::uint64_t>>(n, jobs, [&](int c) {
    std::vector<std::uint64_t> counts(un, 0);
    kernel::Workspace ws(un);
    kernel::for_each_permutation(n, c + 1, [&](std::span<const Entry> pi) {
      ++counts[static_cast<std::size_t>(ws.passes_to_sort(pi, machine))];
    });
    return counts;
  });
  PassHistogram h{n, machine, {}};
  for (int k = 0; k < n; ++k) h.counts[k] = 0;
  for (const auto& p : parts) {
    for (int k = 0; k < n; ++k) h.counts[k] += p[static_cast<std::size_t>(k)];
  }
  return h;
}

std::uint64_t count_west_t(int n, int t, Machine machine, int jobs) {
  require_length(n, 0, kMaxStreamLength, "length");
  require_permutation_machine(machine);
  if (t < 0) throw std::invalid_argument("pass count must be nonnegative");
  if (n == 0) return 1;
  const auto un = static_cast<std::size_t>(n);
  auto parts = run_chunks<std::uint64_t>(n, jobs, [&](int c) {
    std::uint64_t count = 0;
    kernel::Workspace ws(un);
    kernel::for_each_permutation(n, c + 1, [&](std::span<const Entry> pi) {
      if (is_identity(ws.apply(pi, machine, t))) ++count;
    });
    return count;
  });
  std::uint64_t total = 0;
  for (auto p : parts) total += p;
  return total;
}

BigInt west2_formula(int n) {
  if (n < 1) throw std::invalid_argument("west2 formula needs n >= 1");
  auto fact = [](int m) {
    BigInt f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  const BigInt numerator = 2 * fact(3 * n);
  const BigInt denominator = fact(n + 1) * fact(2 * n + 1);
  if (numerator % denominator != 0) {
    throw std::logic_error("west2 formula is not integral at n=" + std::to_string(n));
  }
  return numerator / denominator;
}

std::uint64_t count_series_sortable(int n, int t, Machine machine, int jobs) {
  require_length(n, 0, kMaxMaterializedLength, "length");
  require_permutation_machine(machine);
  if (t < 0) throw std::invalid_argument("pass count must be nonnegative");
  if (n == 0) return 1;
  const auto total = static_cast<std::int64_t>(factorial(n));
  // sortable[r]: identity reachable from unrank(r) within the passes so far.
  std::vector<char> sortable(static_cast<std::size_t>(total), 0);
  sortable[0] = 1;  // rank 0 is the identity
  const auto outputs = machine == Machine::stack ? stack_outputs : pop_stack_outputs;
  for (int pass = 0; pass < t; ++pass) {
    std::vector<char> next = sortable;
#pragma omp parallel for schedule(dynamic, 64) num_threads(std::max(jobs, 1))
    for (std::int64_t r = 0; r < total; ++r) {
      if (next[r]) continue;
      for (const auto& sigma : outputs(unrank(static_cast<std::uint64_t>(r), n))) {
        if (sortable[rank(sigma.entries())]) {
          next[r] = 1;
          break;
        }
      }
    }
    if (next == sortable) break;
    sortable = std::move(next);
  }
  return static_cast<std::uint64_t>(std::count(sortable.begin(), sortable.end(), 1));
}

bool is_pop_stacked(const Permutation& pi) {
  const int n = static_cast<int>(pi.size());
  require_length(n, 0, kMaxMaterializedLength, "length");
  if (n == 0) return true;
  const auto un = pi.size();
  std::vector<Entry> out(un), scratch(un);
  bool found = false;
  kernel::for_each_permutation(n, 0, [&](std::span<const Entry> sigma) {
    if (found) return;
    kernel::pop_stack_pass(sigma, out, scratch);
    found = std::equal(out.begin(), out.end(), pi.begin());
  });
  return found;
}

namespace serial {

VerificationReport verify_theorem(int n) {
  require_length(n, 1, kMaxStreamLength, "length");
  VerificationReport report{"theorem", scope_n(n)};
  int max_passes = 0;
  for (const auto& pi : all_permutations(n)) {
    const auto trace = iterate(Machine::popstack, pi, n - 1);
    ++report.checked;
    if (!trace.sorted) {
      report.record_failure("pi=" + format_permutation(pi) + " P^" +
                            std::to_string(n - 1) + "(pi)=" +
                            format_permutation(trace.states.back()));
      continue;
    }
    const auto first_sorted = std::find_if(trace.states.begin(), trace.states.end(),
                                           [](const Permutation& s) { return s.is_identity(); });
    max_passes = std::max(max_passes, static_cast<int>(first_sorted - trace.states.begin()));
  }
  if (n >= 2) {
    ++report.checked;
    if (max_passes != n - 1) {
      report.record_failure("no permutation of length " + std::to_string(n) +
                            " needs " + std::to_string(n - 1) + " passes (max " +
                            std::to_string(max_passes) + ")");
    }
  }
  return report;
}

VerificationReport verify_projection_tumble(int n) {
  require_length(n, 1, kMaxStreamLength, "length");
  VerificationReport report{"projection-tumble", scope_n(n)};
  for (const auto& pi : all_permutations(n)) check_projection(pi, pop_stack_pass(pi), report);
  return report;
}

VerificationReport verify_flip_monotone(int max_len) {
  require_length(max_len, 1, 20, "word length");
  VerificationReport report{"flip-monotone", scope_len(max_len)};
  for (int len = 1; len <= max_len; ++len) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << len); ++m) {
      check_flip_monotone(len, m, report);
    }
  }
  return report;
}

VerificationReport verify_worst_tumble(int max_len) {
  require_length(max_len, 1, 20, "word length");
  VerificationReport report{"worst-tumble", scope_len(max_len)};
  for (int len = 1; len <= max_len; ++len) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << len); ++m) {
      check_worst_tumble(BinaryWord::from_mask(m, len), report);
    }
  }
  return report;
}

PassHistogram pass_histogram(int n, Machine machine) {
  require_length(n, 1, kMaxStreamLength, "length");
  require_permutation_machine(machine);
  PassHistogram h{n, machine, {}};
  for (int k = 0; k < n; ++k) h.counts[k] = 0;
  for (const auto& pi : all_permutations(n)) ++h.counts[trace_to_sorted(machine, pi).passes()];
  return h;
}

std::uint64_t count_west_t(int n, int t, Machine machine) {
  require_length(n, 0, kMaxStreamLength, "length");
  require_permutation_machine(machine);
  std::uint64_t count = 0;
  for (const auto& pi : all_permutations(n)) {
    if (iterate(machine, pi, t).sorted) ++count;
  }
  return count;
}

}  // namespace serial

namespace {

int cap_theorem(const Limits& l) { return l.theorem_n; }
int cap_projection(const Limits& l) { return l.projection_n; }
int cap_nondet(const Limits& l) { return l.nondet_n; }
int cap_words(const Limits& l) { return l.word_length; }
int cap_staircase(const Limits&) { return 64; }

}  // namespace

const std::vector<ClaimInfo>& claims() {
  static const std::vector<ClaimInfo> table = {
      {"theorem", "P^(n-1)(pi) is the identity for every pi in S_n", true, 10, cap_theorem},
      {"tightness", "23...n1 needs exactly n-1 pop-stack passes", false, 10, cap_theorem},
      {"projection-tumble", "P(pi)|k lies in T(pi|k)", true, 7, cap_projection},
      {"projection-iterated", "P^t(pi)|k lies in T^t(pi|k)", true, 6, cap_projection},
      {"flip-monotone", "u <= v implies F(u) <= F(v)", false, 10, cap_words},
      {"staircase", "1^b 0^a sorts in exactly a+b-1 flips", false, 12, cap_staircase},
      {"worst-tumble", "every tumble output is <= F(w), and F(w) is a tumble", false, 12,
       cap_words},
      {"characterization", "stack-sortable = Av(231), pop-stack-sortable = Av(231, 312)",
       true, 8, cap_theorem},
      {"canonical-optimality", "one nondeterministic pass sorts iff the canonical pass does",
       true, 7, cap_nondet},
      {"simulation-oracle", "device simulations agree with the recursive definitions", true, 8,
       cap_theorem},
      {"tumble-oracle", "structural tumble sets agree with naive factor enumeration", false,
       12, cap_words},
      {"histogram", "pass histogram sums to n! and tops out at key n-1", true, 9,
       cap_theorem},
      {"west2", "West-2-stack-sortable count matches 2(3n)!/((n+1)!(2n+1)!)", true, 8,
       cap_theorem},
  };
  return table;
}

const ClaimInfo* find_claim(std::string_view name) {
  for (const auto& c : claims()) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport verify_claim(std::string_view name, int n, int jobs,
                                const Limits& limits) {
  const auto* info = find_claim(name);
  if (info == nullptr) throw std::invalid_argument("unknown claim '" + std::string(name) + "'");
  const int cap = info->cap(limits);
  if (n < 1 || n > cap) {
    throw std::out_of_range("claim '" + std::string(name) + "' accepts n in 1.." +
                            std::to_string(cap) + ", got " + std::to_string(n));
  }

  if (name == "tightness") return verify_tightness(std::max(n, 2));
  if (name == "flip-monotone") return verify_flip_monotone(n, jobs);
  if (name == "staircase") return verify_staircase(n);
  if (name == "worst-tumble") return verify_worst_tumble(n, jobs);
  if (name == "tumble-oracle") return verify_tumble_oracle(n, jobs);

  VerificationReport (*single)(int, int) = nullptr;
  if (name == "theorem") single = verify_theorem;
  else if (name == "projection-tumble") single = verify_projection_tumble;
  else if (name == "projection-iterated") single = verify_projection_iterated;
  else if (name == "characterization") single = verify_characterizations;
  else if (name == "canonical-optimality") single = verify_canonical_optimality;
  else if (name == "simulation-oracle") single = verify_simulation_oracles;
  else if (name == "histogram") single = verify_histogram;
  else if (name == "west2") single = verify_west2;

  VerificationReport report{std::string(name), "1 <= n <= " + std::to_string(n)};
  for (int m = 1; m <= n; ++m) report.merge(single(m, jobs));
  return report;
}

}  // namespace popstack
