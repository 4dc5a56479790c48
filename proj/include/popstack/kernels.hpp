#pragma once

// Allocation-free device simulations over raw entry spans. These are the
// production paths; the Permutation-level API and the exhaustive sweeps
// are built on them.

#include <span>
#include <stdexcept>
#include <vector>

#include "popstack/machine.hpp"
#include "popstack/permutation.hpp"

namespace popstack {

// Raised when a permutation of length n needs more than n-1 passes.
class TheoremViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace kernel {

// Canonical stack algorithm: push while the next input is below the top
// (or the stack is empty), otherwise pop one entry. `scratch` holds the
// stack and must be at least in.size() long.
void stack_pass(std::span<const Entry> in, std::span<Entry> out,
                std::span<Entry> scratch);

// Canonical pop-stack algorithm: as above, but a pop empties the device.
void pop_stack_pass(std::span<const Entry> in, std::span<Entry> out,
                    std::span<Entry> scratch);

// Reusable buffers for repeated passes over permutations of one length.
class Workspace {
 public:
  explicit Workspace(std::size_t n) : a_(n), b_(n), scratch_(n) {}

  std::size_t length() const { return a_.size(); }

  // Smallest t with machine^t(in) = identity. Throws TheoremViolation past
  // n-1 passes (the safety cap is n).
  int passes_to_sort(std::span<const Entry> in, Machine machine);

  // Applies `passes` rounds of the machine, stopping early once sorted.
  // Returns the final state, valid until the next call.
  std::span<const Entry> apply(std::span<const Entry> in, Machine machine,
                               int passes);

 private:
  void pass(Machine machine);

  std::vector<Entry> a_, b_, scratch_;
};

// Calls fn(span) for each permutation of length n with first entry `first`
// in lexicographic order; first = 0 visits all of S_n.
template <class Fn>
void for_each_permutation(int n, int first, Fn&& fn);

}  // namespace kernel
}  // namespace popstack

#include <algorithm>
#include <numeric>

namespace popstack::kernel {

template <class Fn>
void for_each_permutation(int n, int first, Fn&& fn) {
  std::vector<Entry> work(static_cast<std::size_t>(n));
  std::size_t skip = 0;
  if (first > 0) {
    skip = 1;
    work[0] = first;
    Entry next = 1;
    for (int i = 1; i < n; ++i) {
      if (next == first) ++next;
      work[i] = next++;
    }
  } else {
    std::iota(work.begin(), work.end(), 1);
  }
  do {
    fn(std::span<const Entry>(work));
  } while (std::next_permutation(work.begin() + static_cast<std::ptrdiff_t>(skip),
                                 work.end()));
}

}  // namespace popstack::kernel
