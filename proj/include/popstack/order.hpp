#pragma once

#include "popstack/permutation.hpp"

namespace popstack {

// u ⊴ v: for every i, the i-th zero of u sits at or before the i-th zero
// of v. v may carry extra zeros; throws std::invalid_argument if it has
// fewer than u.
bool zero_order_leq(const BinaryWord& u, const BinaryWord& v);

}  // namespace popstack
