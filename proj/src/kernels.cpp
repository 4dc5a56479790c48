#include "popstack/kernels.hpp"

#include <algorithm>
#include <string>

namespace popstack::kernel {

void stack_pass(std::span<const Entry> in, std::span<Entry> out,
                std::span<Entry> scratch) {
  std::size_t top = 0;  // stack height
  std::size_t emitted = 0;
  std::size_t next = 0;
  while (next < in.size()) {
    if (top == 0 || in[next] < scratch[top - 1]) {
      scratch[top++] = in[next++];
    } else {
      out[emitted++] = scratch[--top];
    }
  }
  while (top > 0) out[emitted++] = scratch[--top];
}

void pop_stack_pass(std::span<const Entry> in, std::span<Entry> out,
                    std::span<Entry> scratch) {
  std::size_t top = 0;
  std::size_t emitted = 0;
  std::size_t next = 0;
  auto pop_all = [&] {
    while (top > 0) out[emitted++] = scratch[--top];
  };
  while (next < in.size()) {
    if (top == 0 || in[next] < scratch[top - 1]) {
      scratch[top++] = in[next++];
    } else {
      pop_all();
    }
  }
  pop_all();
}

void Workspace::pass(Machine machine) {
  switch (machine) {
    case Machine::stack: stack_pass(a_, b_, scratch_); break;
    case Machine::popstack: pop_stack_pass(a_, b_, scratch_); break;
    default:
      throw std::invalid_argument("machine '" + std::string(to_string(machine)) +
                                  "' does not act on permutations");
  }
  std::swap(a_, b_);
}

int Workspace::passes_to_sort(std::span<const Entry> in, Machine machine) {
  const auto n = in.size();
  std::copy(in.begin(), in.end(), a_.begin());
  int t = 0;
  while (!is_identity(std::span<const Entry>(a_.data(), n))) {
    if (static_cast<std::size_t>(t) + 1 >= std::max<std::size_t>(n, 1)) {
      throw TheoremViolation(std::string(to_string(machine)) +
                             " needed more than n-1 passes on a permutation "
                             "of length " + std::to_string(n));
    }
    pass(machine);
    ++t;
  }
  return t;
}

std::span<const Entry> Workspace::apply(std::span<const Entry> in,
                                        Machine machine, int passes) {
  std::copy(in.begin(), in.end(), a_.begin());
  for (int t = 0; t < passes; ++t) {
    if (is_identity(std::span<const Entry>(a_))) break;
    pass(machine);
  }
  return a_;
}

}  // namespace popstack::kernel
