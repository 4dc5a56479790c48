#pragma once

// Exhaustive verifiers and enumeration harness. Sweeps partition S_n by
// first entry (or the word space by length and leading word) and merge the
// per-chunk results in chunk order, so output does not depend on `jobs`.
// The serial:: variants walk the full stream through the value-level API
// and exist to cross-check the parallel kernels.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "popstack/machine.hpp"
#include "popstack/order.hpp"
#include "popstack/permutation.hpp"

namespace popstack {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxRecordedFailures = 64;

struct VerificationReport {
  VerificationReport() = default;
  VerificationReport(std::string claim_name, std::string scope_text)
      : claim(std::move(claim_name)), scope(std::move(scope_text)) {}

  std::string claim;
  std::string scope;
  std::uint64_t checked = 0;
  std::uint64_t failure_count = 0;
  // The first kMaxRecordedFailures counterexamples, fully spelled out.
  std::vector<std::string> failures;

  bool passed() const { return failure_count == 0; }
  void record_failure(std::string instance);
  void merge(const VerificationReport& other);
};

struct PassHistogram {
  int n = 0;
  Machine machine = Machine::popstack;
  // pass count -> number of permutations; keys 0..n-1 always present.
  std::map<int, std::uint64_t> counts;

  std::uint64_t total() const;
  // Largest key with a nonzero count, -1 if none.
  int max_occupied() const;
};

struct CountRow {
  int n;
  int t;
  Machine machine;
  std::uint64_t count;
};

struct CountTable {
  std::vector<CountRow> rows;
};

// Per-claim size caps. Defaults keep each sweep in seconds.
struct Limits {
  int theorem_n = 10;      // deterministic sweeps over S_n
  int projection_n = 7;    // sweeps that build tumble sets per instance
  int nondet_n = 8;        // sweeps that build nondeterministic output sets
  int word_length = 14;    // binary-word sweeps

  // POPSTACK_MAX_N, when set, replaces every permutation-length cap
  // (clamped to the hard limits).
  static Limits from_environment();
};

// Hard limit for anything that ranks or materializes S_n.
inline constexpr int kMaxMaterializedLength = 10;

int default_jobs();

VerificationReport verify_theorem(int n, int jobs = default_jobs());
VerificationReport verify_tightness(int max_n);
VerificationReport verify_projection_tumble(int n, int jobs = default_jobs());
VerificationReport verify_projection_iterated(int n, int jobs = default_jobs());
VerificationReport verify_flip_monotone(int max_len, int jobs = default_jobs());
VerificationReport verify_staircase(int max_ab);
VerificationReport verify_worst_tumble(int max_len, int jobs = default_jobs());
VerificationReport verify_characterizations(int n, int jobs = default_jobs());
VerificationReport verify_canonical_optimality(int n, int jobs = default_jobs());
VerificationReport verify_simulation_oracles(int n, int jobs = default_jobs());
VerificationReport verify_tumble_oracle(int max_len, int jobs = default_jobs());
VerificationReport verify_histogram(int n, int jobs = default_jobs());
VerificationReport verify_west2(int n, int jobs = default_jobs());

// passes_to_sort(1^b 0^a, flip)
int staircase_flip_count(int a, int b);

PassHistogram pass_histogram(int n, Machine machine, int jobs = default_jobs());
std::uint64_t count_west_t(int n, int t, Machine machine, int jobs = default_jobs());
BigInt west2_formula(int n);
std::uint64_t count_series_sortable(int n, int t, Machine machine,
                                    int jobs = default_jobs());
bool is_pop_stacked(const Permutation& pi);

namespace serial {

VerificationReport verify_theorem(int n);
VerificationReport verify_projection_tumble(int n);
VerificationReport verify_flip_monotone(int max_len);
VerificationReport verify_worst_tumble(int max_len);
PassHistogram pass_histogram(int n, Machine machine);
std::uint64_t count_west_t(int n, int t, Machine machine);

}  // namespace serial

// Named claims as exposed by `verify <claim>`.
struct ClaimInfo {
  std::string_view name;
  std::string_view summary;
  // True when --n is a permutation length swept over 1..n; otherwise the
  // verifier interprets n itself (word length, staircase bound, ...).
  bool permutation_sweep;
  int default_n;
  int (*cap)(const Limits&);
};

const std::vector<ClaimInfo>& claims();
const ClaimInfo* find_claim(std::string_view name);

// Runs one named claim. Permutation claims are swept over every length
// 1..n and merged. Throws std::invalid_argument for unknown claims and
// std::out_of_range when n exceeds the claim's cap in `limits`.
VerificationReport verify_claim(std::string_view name, int n, int jobs,
                                const Limits& limits);

}  // namespace popstack
