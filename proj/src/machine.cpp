#include "popstack/machine.hpp"

#include <stdexcept>

namespace popstack {

std::string_view to_string(Machine m) {
  switch (m) {
    case Machine::stack: return "stack";
    case Machine::popstack: return "popstack";
    case Machine::flip: return "flip";
    case Machine::tumble: return "tumble";
  }
  return "?";
}

Machine parse_machine(std::string_view name) {
  if (name == "stack") return Machine::stack;
  if (name == "popstack" || name == "pop-stack") return Machine::popstack;
  if (name == "flip") return Machine::flip;
  if (name == "tumble") return Machine::tumble;
  throw std::invalid_argument("unknown machine '" + std::string(name) + "'");
}

}  // namespace popstack
