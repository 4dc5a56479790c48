#pragma once

// Independent reference routes kept for cross-checking the production
// kernels. Slow and allocation-heavy by construction.

#include <set>

#include "popstack/permutation.hpp"

namespace popstack::reference {

// S(lambda n rho) = S(lambda) S(rho) n
Permutation stack_pass_recursive(const Permutation& pi);

// Reverses each maximal decreasing run in place.
Permutation pop_stack_pass_by_runs(const Permutation& pi);

// Enumerates every collection of non-overlapping 1+0+ factors, keeps those
// covering every 10 factor, and reverses the chosen factors.
std::set<BinaryWord> tumble_set_naive(const BinaryWord& w);

}  // namespace popstack::reference
