#pragma once

#include <string>
#include <string_view>

namespace popstack {

enum class Machine { stack, popstack, flip, tumble };

std::string_view to_string(Machine m);
// Throws std::invalid_argument on an unknown name.
Machine parse_machine(std::string_view name);

// stack and popstack act on permutations; flip and tumble on binary words.
inline bool acts_on_permutations(Machine m) {
  return m == Machine::stack || m == Machine::popstack;
}

}  // namespace popstack
