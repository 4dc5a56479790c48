#include <doctest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "popstack/deterministic.hpp"
#include "popstack/lab.hpp"
#include "popstack/nondeterministic.hpp"

using namespace popstack;

namespace {

// Frozen from an independent brute-force run over S_n (plain recursive
// definitions, no shared code): pass counts 0..n-1 under the pop-stack.
const std::vector<std::vector<std::uint64_t>> kPopstackHistograms = {
    {1},
    {1, 1},
    {1, 3, 2},
    {1, 7, 8, 8},
    {1, 15, 26, 46, 32},
    {1, 31, 80, 191, 262, 155},
    {1, 63, 234, 735, 1440, 1737, 830},
    {1, 127, 664, 2752, 6924, 12314, 12432, 5106},
    {1, 255, 1850, 10114, 31928, 73122, 112108, 98156, 35346},
};

const std::vector<std::vector<std::uint64_t>> kStackHistograms = {
    {1},
    {1, 1},
    {1, 4, 1},
    {1, 13, 8, 2},
    {1, 41, 49, 23, 6},
    {1, 131, 276, 198, 90, 24},
    {1, 428, 1509, 1556, 982, 444, 120},
    {1, 1429, 8184, 11812, 9678, 5856, 2640, 720},
};

std::vector<std::uint64_t> values(const PassHistogram& h) {
  std::vector<std::uint64_t> out;
  for (const auto& [k, c] : h.counts) out.push_back(c);
  return out;
}

}  // namespace

TEST_CASE("VerificationReport merge and failure cap") {
  VerificationReport a{"x", "s"}, b{"x", "s"};
  a.checked = 3;
  b.checked = 4;
  CHECK(a.passed());
  for (std::size_t i = 0; i < kMaxRecordedFailures + 5; ++i) b.record_failure("f");
  a.merge(b);
  CHECK(a.checked == 7);
  CHECK(a.failure_count == kMaxRecordedFailures + 5);
  CHECK(a.failures.size() == kMaxRecordedFailures);
  CHECK_FALSE(a.passed());
}

TEST_CASE("verify_theorem") {
  for (int n = 1; n <= 8; ++n) {
    const auto r = verify_theorem(n, 3);
    CHECK(r.passed());
    CHECK(r.checked == factorial(n) + (n >= 2 ? 1 : 0));
    const auto s = serial::verify_theorem(n);
    CHECK(s.checked == r.checked);
    CHECK(s.failure_count == r.failure_count);
  }
  CHECK_THROWS_AS(verify_theorem(0), std::out_of_range);
}

TEST_CASE("verify_tightness and staircase") {
  CHECK(verify_tightness(12).passed());
  CHECK(verify_tightness(12).checked == 11);
  CHECK(staircase_flip_count(1, 1) == 1);
  CHECK(staircase_flip_count(2, 2) == 3);
  CHECK(staircase_flip_count(4, 3) == 6);
  CHECK_THROWS_AS(staircase_flip_count(0, 2), std::invalid_argument);
  const auto r = verify_staircase(12);
  CHECK(r.passed());
  CHECK(r.checked == 144);
}

TEST_CASE("verify_projection_tumble") {
  const auto r1 = verify_projection_tumble(1, 2);
  CHECK(r1.passed());
  CHECK(r1.checked == 2);
  const auto r5 = verify_projection_tumble(5, 2);
  CHECK(r5.passed());
  CHECK(r5.checked == 120 * 6);
  const auto s5 = serial::verify_projection_tumble(5);
  CHECK(s5.checked == r5.checked);
  CHECK(verify_projection_iterated(5, 2).passed());
}

TEST_CASE("word sweeps: serial and parallel agree") {
  const auto fm = verify_flip_monotone(8, 4);
  const auto fs = serial::verify_flip_monotone(8);
  CHECK(fm.passed());
  CHECK(fm.checked == fs.checked);
  CHECK(fm.checked > 0);

  const auto wt = verify_worst_tumble(10, 4);
  const auto ws = serial::verify_worst_tumble(10);
  CHECK(wt.passed());
  CHECK(wt.checked == ws.checked);
  CHECK(verify_tumble_oracle(10, 4).passed());
}

TEST_CASE("pass_histogram matches frozen brute-force values") {
  for (int n = 1; n <= 9; ++n) {
    CHECK(values(pass_histogram(n, Machine::popstack, 3)) == kPopstackHistograms[n - 1]);
  }
  for (int n = 1; n <= 8; ++n) {
    CHECK(values(pass_histogram(n, Machine::stack, 3)) == kStackHistograms[n - 1]);
  }
  for (int n = 1; n <= 7; ++n) {
    for (auto m : {Machine::stack, Machine::popstack}) {
      const auto par = pass_histogram(n, m, 4);
      const auto ser = serial::pass_histogram(n, m);
      CHECK(par.counts == ser.counts);
      CHECK(par.total() == factorial(n));
    }
  }
  const auto h3 = pass_histogram(3, Machine::popstack, 1);
  CHECK(h3.max_occupied() == 2);
  CHECK(pass_histogram(1, Machine::popstack).counts == std::map<int, std::uint64_t>{{0, 1}});
  CHECK_THROWS_AS(pass_histogram(3, Machine::flip), std::invalid_argument);
}

TEST_CASE("histogram output does not depend on worker count") {
  const auto one = pass_histogram(8, Machine::popstack, 1);
  for (int jobs : {2, 3, 8}) CHECK(pass_histogram(8, Machine::popstack, jobs).counts == one.counts);
}

TEST_CASE("count_west_t") {
  CHECK(count_west_t(4, 1, Machine::stack) == 14);
  CHECK(count_west_t(4, 2, Machine::stack) == 22);
  CHECK(count_west_t(3, 1, Machine::popstack) == 4);
  CHECK(count_west_t(0, 0, Machine::stack) == 1);
  CHECK_THROWS_AS(count_west_t(3, -1, Machine::stack), std::invalid_argument);

  const Pattern p231{Permutation{2, 3, 1}};
  for (int n = 1; n <= 8; ++n) {
    // Layered permutations correspond to compositions of n.
    CHECK(count_west_t(n, 1, Machine::popstack) == (std::uint64_t{1} << (n - 1)));
    std::uint64_t avoiders = 0;
    for (const auto& pi : all_permutations(n)) avoiders += avoids(pi, p231) ? 1 : 0;
    CHECK(count_west_t(n, 1, Machine::stack) == avoiders);
    CHECK(avoiders == oracle::catalan(n));
    CHECK(count_west_t(n, n - 1, Machine::stack) == factorial(n));
    CHECK(count_west_t(n, n - 1, Machine::popstack) == factorial(n));
    for (int t = 0; t + 1 < n; ++t) {
      CHECK(count_west_t(n, t, Machine::popstack) <= count_west_t(n, t + 1, Machine::popstack));
    }
  }
  for (int n = 1; n <= 6; ++n) {
    for (int t = 0; t < n; ++t) {
      CHECK(count_west_t(n, t, Machine::stack, 3) == serial::count_west_t(n, t, Machine::stack));
    }
  }
}

TEST_CASE("west2_formula") {
  CHECK(west2_formula(1) == 1);
  CHECK(west2_formula(2) == 2);
  CHECK(west2_formula(4) == 22);
  for (int n = 1; n <= 8; ++n) CHECK(BigInt(count_west_t(n, 2, Machine::stack)) == west2_formula(n));
  // Frozen from an independent big-integer evaluation.
  CHECK(west2_formula(20).str() == "9737153323590");
  CHECK(west2_formula(30).str() == "711933341625150895008");
  CHECK_THROWS_AS(west2_formula(0), std::invalid_argument);
}

TEST_CASE("count_series_sortable") {
  CHECK(count_series_sortable(3, 1, Machine::popstack) == 4);
  CHECK(count_series_sortable(3, 1, Machine::stack) == 5);
  CHECK(count_series_sortable(2, 0, Machine::stack) == 1);
  CHECK(count_series_sortable(2, 0, Machine::popstack) == 1);
  for (int n = 1; n <= 6; ++n) {
    for (auto m : {Machine::stack, Machine::popstack}) {
      CHECK(count_series_sortable(n, 1, m) == count_west_t(n, 1, m));
      for (int t = 0; t <= 3; ++t) {
        const auto series = count_series_sortable(n, t, m, 2);
        CHECK(series >= count_west_t(n, t, m));
        if (n <= 5) {
          std::uint64_t direct = 0;
          for (const auto& pi : all_permutations(n)) direct += sortable_in_series(pi, m, t) ? 1 : 0;
          CHECK(series == direct);
        }
      }
    }
  }
}

TEST_CASE("is_pop_stacked") {
  CHECK(is_pop_stacked(Permutation::identity(4)));
  CHECK_FALSE(is_pop_stacked({2, 3, 1}));
  CHECK(is_pop_stacked({2, 1, 3}));
  CHECK(is_pop_stacked(Permutation{}));
  for (int n = 1; n <= 5; ++n) {
    std::set<Permutation> image;
    for (const auto& s : all_permutations(n)) image.insert(pop_stack_pass(s));
    for (const auto& pi : all_permutations(n)) CHECK(is_pop_stacked(pi) == image.contains(pi));
  }
}

TEST_CASE("claims registry") {
  Limits limits;
  for (const auto& c : claims()) {
    const int n = std::min(c.default_n, c.permutation_sweep ? 5 : 6);
    const auto r = verify_claim(c.name, n, 2, limits);
    CHECK_MESSAGE(r.passed(), c.name);
    CHECK(r.checked > 0);
  }
  CHECK_THROWS_AS(verify_claim("nope", 3, 1, limits), std::invalid_argument);
  CHECK_THROWS_AS(verify_claim("theorem", 11, 1, limits), std::out_of_range);
  CHECK_THROWS_AS(verify_claim("theorem", 0, 1, limits), std::out_of_range);
}

TEST_CASE("Limits::from_environment") {
  ::setenv("POPSTACK_MAX_N", "12", 1);
  auto l = Limits::from_environment();
  CHECK(l.theorem_n == 12);
  CHECK(l.projection_n == 12);
  CHECK(l.nondet_n == kMaxMaterializedLength);
  ::setenv("POPSTACK_MAX_N", "abc", 1);
  CHECK_THROWS_AS(Limits::from_environment(), std::invalid_argument);
  ::unsetenv("POPSTACK_MAX_N");
  CHECK(Limits::from_environment().theorem_n == Limits{}.theorem_n);
}
