#include "popstack/reference.hpp"

#include <algorithm>
#include <vector>

namespace popstack::reference {

namespace {

void stack_recurse(std::span<const Entry> word, std::vector<Entry>& out) {
  if (word.empty()) return;
  const auto top = std::max_element(word.begin(), word.end());
  const auto split = static_cast<std::size_t>(top - word.begin());
  stack_recurse(word.first(split), out);
  stack_recurse(word.subspan(split + 1), out);
  out.push_back(*top);
}

struct Factor {
  std::size_t first, last;  // inclusive
};

bool is_ones_then_zeros(std::span<const std::uint8_t> bits, std::size_t first,
                        std::size_t last) {
  std::size_t i = first;
  while (i <= last && bits[i] == 1) ++i;
  if (i == first || i > last) return false;
  while (i <= last && bits[i] == 0) ++i;
  return i == last + 1;
}

void choose(std::span<const std::uint8_t> bits, std::size_t pos,
            std::vector<Factor>& chosen, std::set<BinaryWord>& out) {
  if (pos == bits.size()) {
    for (std::size_t i = 0; i + 1 < bits.size(); ++i) {
      if (bits[i] != 1 || bits[i + 1] != 0) continue;
      const bool same = std::any_of(chosen.begin(), chosen.end(), [&](const Factor& f) {
        return f.first <= i && i + 1 <= f.last;
      });
      if (!same) return;
    }
    std::vector<std::uint8_t> result(bits.begin(), bits.end());
    for (const auto& f : chosen) {
      std::reverse(result.begin() + static_cast<std::ptrdiff_t>(f.first),
                   result.begin() + static_cast<std::ptrdiff_t>(f.last) + 1);
    }
    out.insert(BinaryWord(std::move(result)));
    return;
  }
  choose(bits, pos + 1, chosen, out);
  for (std::size_t last = pos + 1; last < bits.size(); ++last) {
    if (!is_ones_then_zeros(bits, pos, last)) continue;
    chosen.push_back({pos, last});
    choose(bits, last + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

Permutation stack_pass_recursive(const Permutation& pi) {
  std::vector<Entry> out;
  out.reserve(pi.size());
  stack_recurse(pi.entries(), out);
  return Permutation::unchecked(std::move(out));
}

Permutation pop_stack_pass_by_runs(const Permutation& pi) {
  std::vector<Entry> out(pi.begin(), pi.end());
  for (const auto& run : decreasing_runs(pi).runs) {
    std::reverse(out.begin() + static_cast<std::ptrdiff_t>(run.first),
                 out.begin() + static_cast<std::ptrdiff_t>(run.last));
  }
  return Permutation::unchecked(std::move(out));
}

std::set<BinaryWord> tumble_set_naive(const BinaryWord& w) {
  std::set<BinaryWord> out;
  std::vector<Factor> chosen;
  choose(w.bits(), 0, chosen, out);
  return out;
}

}  // namespace popstack::reference
