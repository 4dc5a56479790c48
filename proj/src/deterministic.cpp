#include "popstack/deterministic.hpp"

#include <string>

namespace popstack {

namespace {

void require_permutation_machine(Machine op) {
  if (!acts_on_permutations(op)) {
    throw std::invalid_argument("machine '" + std::string(to_string(op)) +
                                "' requires a binary word");
  }
}

void require_flip(Machine op) {
  if (op == Machine::tumble) {
    throw std::invalid_argument("tumble is nondeterministic; use reach");
  }
  if (op != Machine::flip) {
    throw std::invalid_argument("machine '" + std::string(to_string(op)) +
                                "' requires a permutation");
  }
}

Permutation apply_once(Machine op, const Permutation& pi) {
  return op == Machine::stack ? stack_pass(pi) : pop_stack_pass(pi);
}

}  // namespace

Permutation stack_pass(const Permutation& pi) {
  std::vector<Entry> out(pi.size()), scratch(pi.size());
  kernel::stack_pass(pi.entries(), out, scratch);
  return Permutation::unchecked(std::move(out));
}

Permutation pop_stack_pass(const Permutation& pi) {
  std::vector<Entry> out(pi.size()), scratch(pi.size());
  kernel::pop_stack_pass(pi.entries(), out, scratch);
  return Permutation::unchecked(std::move(out));
}

BinaryWord flip_pass(const BinaryWord& w) {
  std::vector<std::uint8_t> bits(w.bits().begin(), w.bits().end());
  for (std::size_t i = 0; i + 1 < bits.size();) {
    if (bits[i] == 1 && bits[i + 1] == 0) {
      bits[i] = 0;
      bits[i + 1] = 1;
      i += 2;
    } else {
      ++i;
    }
  }
  return BinaryWord(std::move(bits));
}

PassTrace<Permutation> iterate(Machine op, const Permutation& pi, int t) {
  require_permutation_machine(op);
  if (t < 0) throw std::invalid_argument("pass count must be nonnegative");
  PassTrace<Permutation> trace{op, {pi}, false};
  for (int i = 0; i < t; ++i) trace.states.push_back(apply_once(op, trace.states.back()));
  trace.sorted = trace.states.back().is_identity();
  return trace;
}

PassTrace<BinaryWord> iterate(Machine op, const BinaryWord& w, int t) {
  require_flip(op);
  if (t < 0) throw std::invalid_argument("pass count must be nonnegative");
  PassTrace<BinaryWord> trace{op, {w}, false};
  for (int i = 0; i < t; ++i) trace.states.push_back(flip_pass(trace.states.back()));
  trace.sorted = trace.states.back().is_sorted();
  return trace;
}

PassTrace<Permutation> trace_to_sorted(Machine op, const Permutation& pi) {
  require_permutation_machine(op);
  const auto cap = pi.size() > 0 ? pi.size() - 1 : 0;
  PassTrace<Permutation> trace{op, {pi}, false};
  while (!trace.states.back().is_identity()) {
    if (trace.states.size() > cap) {
      throw TheoremViolation(std::string(to_string(op)) + " needed more than " +
                             std::to_string(cap) + " passes on " +
                             format_permutation(pi));
    }
    trace.states.push_back(apply_once(op, trace.states.back()));
  }
  trace.sorted = true;
  return trace;
}

PassTrace<BinaryWord> trace_to_sorted(Machine op, const BinaryWord& w) {
  require_flip(op);
  const auto cap = w.size() > 0 ? w.size() - 1 : 0;
  PassTrace<BinaryWord> trace{op, {w}, false};
  while (!trace.states.back().is_sorted()) {
    if (trace.states.size() > cap) {
      throw TheoremViolation("flip needed more than " + std::to_string(cap) +
                             " passes on " + w.to_string());
    }
    trace.states.push_back(flip_pass(trace.states.back()));
  }
  trace.sorted = true;
  return trace;
}

int passes_to_sort(const Permutation& pi, Machine op) {
  require_permutation_machine(op);
  kernel::Workspace ws(pi.size());
  return ws.passes_to_sort(pi.entries(), op);
}

int passes_to_sort(const BinaryWord& w, Machine op) {
  return trace_to_sorted(op, w).passes();
}

bool is_west_t_sortable(const Permutation& pi, int t, Machine machine) {
  require_permutation_machine(machine);
  if (t < 0) throw std::invalid_argument("pass count must be nonnegative");
  return passes_to_sort(pi, machine) <= t;
}

}  // namespace popstack
