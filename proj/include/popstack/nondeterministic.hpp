#pragma once

#include <set>

#include "popstack/machine.hpp"
#include "popstack/permutation.hpp"

namespace popstack {

// Deduplicated outputs of a nondeterministic machine, in lexicographic order.
template <class T>
using ReachSet = std::set<T>;

// T(w): every maximal block 1^a 0^b independently reverses one factor
// 1^i 0^j (1 <= i <= a, 1 <= j <= b) straddling its 10 boundary.
ReachSet<BinaryWord> tumble_set(const BinaryWord& w);

// Number of tumble outputs: the product of a*b over descent blocks.
std::uint64_t tumble_set_size(const BinaryWord& w);

// All outputs of one unrestricted stack over every legal push/pop schedule.
ReachSet<Permutation> stack_outputs(const Permutation& pi);

// As stack_outputs, but each pop emits the whole device top-down.
ReachSet<Permutation> pop_stack_outputs(const Permutation& pi);

// t passes with queues in between; t = 0 yields {x}. Throws
// std::invalid_argument when the machine does not match the operand or t < 0.
ReachSet<Permutation> reach(const Permutation& pi, Machine machine, int t);
ReachSet<BinaryWord> reach(const BinaryWord& w, Machine machine, int t);

// Identity in reach(pi, machine, t).
bool sortable_in_series(const Permutation& pi, Machine machine, int t);

}  // namespace popstack
