#pragma once

#include <variant>
#include <vector>

#include "popstack/kernels.hpp"
#include "popstack/machine.hpp"
#include "popstack/permutation.hpp"

namespace popstack {

using Operand = std::variant<Permutation, BinaryWord>;

// S: one pass through a stack under the canonical algorithm.
Permutation stack_pass(const Permutation& pi);
// P: one pass through a pop-stack under the canonical algorithm.
Permutation pop_stack_pass(const Permutation& pi);
// F: reverses every 10 factor simultaneously.
BinaryWord flip_pass(const BinaryWord& w);

// states[i] is op^i of the input. `sorted` records whether the last state
// is the identity / a word of the form 0^a 1^b.
template <class State>
struct PassTrace {
  Machine machine;
  std::vector<State> states;
  bool sorted = false;

  int passes() const { return static_cast<int>(states.size()) - 1; }
};

// Throws std::invalid_argument if the machine does not act on the operand
// type or is nondeterministic, and if t < 0.
PassTrace<Permutation> iterate(Machine op, const Permutation& pi, int t);
PassTrace<BinaryWord> iterate(Machine op, const BinaryWord& w, int t);

// Runs until sorted. Permutations are capped at n-1 passes and words at
// length-1 flips; exceeding either throws TheoremViolation.
PassTrace<Permutation> trace_to_sorted(Machine op, const Permutation& pi);
PassTrace<BinaryWord> trace_to_sorted(Machine op, const BinaryWord& w);

int passes_to_sort(const Permutation& pi, Machine op);
int passes_to_sort(const BinaryWord& w, Machine op);

// True iff machine^t(pi) is the identity. Only stack and popstack.
bool is_west_t_sortable(const Permutation& pi, int t, Machine machine);

}  // namespace popstack
