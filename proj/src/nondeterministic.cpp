#include "popstack/nondeterministic.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "popstack/deterministic.hpp"

namespace popstack {

namespace {

struct DescentBlock {
  std::size_t first;  // start of the ones
  std::size_t ones;
  std::size_t zeros;
};

std::vector<DescentBlock> descent_blocks(std::span<const std::uint8_t> bits) {
  std::vector<DescentBlock> blocks;
  std::size_t i = 0;
  const auto n = bits.size();
  while (i < n) {
    if (bits[i] == 0) {
      ++i;
      continue;
    }
    const auto first = i;
    while (i < n && bits[i] == 1) ++i;
    const auto ones = i - first;
    const auto zero_start = i;
    while (i < n && bits[i] == 0) ++i;
    const auto zeros = i - zero_start;
    if (zeros > 0) blocks.push_back({first, ones, zeros});
  }
  return blocks;
}

// Device simulation shared by both nondeterministic machines. The state is
// (next input position, device contents); memo maps a state to the set of
// output suffixes it can still produce.
class ScheduleSearch {
 public:
  ScheduleSearch(std::span<const Entry> input, bool pop_all)
      : input_(input), pop_all_(pop_all) {}

  ReachSet<Permutation> run() {
    std::vector<Entry> device;
    const auto& suffixes = explore(0, device);
    ReachSet<Permutation> out;
    for (const auto& s : suffixes) out.insert(Permutation::unchecked(s));
    return out;
  }

 private:
  using Suffixes = std::set<std::vector<Entry>>;
  using Key = std::pair<std::size_t, std::vector<Entry>>;

  const Suffixes& explore(std::size_t pos, std::vector<Entry>& device) {
    Key key{pos, device};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    Suffixes result;
    if (pos == input_.size() && device.empty()) {
      result.emplace();
    }
    if (pos < input_.size()) {
      device.push_back(input_[pos]);
      for (const auto& s : explore(pos + 1, device)) result.insert(s);
      device.pop_back();
    }
    if (!device.empty()) {
      std::vector<Entry> emitted;
      std::vector<Entry> rest = device;
      if (pop_all_) {
        emitted.assign(rest.rbegin(), rest.rend());
        rest.clear();
      } else {
        emitted.push_back(rest.back());
        rest.pop_back();
      }
      for (const auto& s : explore(pos, rest)) {
        std::vector<Entry> joined = emitted;
        joined.insert(joined.end(), s.begin(), s.end());
        result.insert(std::move(joined));
      }
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

  std::span<const Entry> input_;
  bool pop_all_;
  std::map<Key, Suffixes> memo_;
};

template <class T, class Step>
ReachSet<T> iterate_sets(const T& start, int t, Step step) {
  if (t < 0) throw std::invalid_argument("pass count must be nonnegative");
  ReachSet<T> current{start};
  for (int i = 0; i < t; ++i) {
    ReachSet<T> next;
    for (const auto& x : current) next.merge(step(x));
    current = std::move(next);
  }
  return current;
}

}  // namespace

ReachSet<BinaryWord> tumble_set(const BinaryWord& w) {
  const auto blocks = descent_blocks(w.bits());
  // Odometer over (i, j) per block.
  std::vector<std::pair<std::size_t, std::size_t>> choice(blocks.size(), {1, 1});
  ReachSet<BinaryWord> out;
  const std::vector<std::uint8_t> base(w.bits().begin(), w.bits().end());
  while (true) {
    std::vector<std::uint8_t> bits = base;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const auto& blk = blocks[b];
      const auto [i, j] = choice[b];
      // 1^i 0^j starts i ones before the boundary; reversed it is 0^j 1^i.
      const auto start = blk.first + blk.ones - i;
      std::fill_n(bits.begin() + static_cast<std::ptrdiff_t>(start), j, 0);
      std::fill_n(bits.begin() + static_cast<std::ptrdiff_t>(start + j), i, 1);
    }
    out.insert(BinaryWord(std::move(bits)));

    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      if (++choice[b].second <= blocks[b].zeros) break;
      choice[b].second = 1;
      if (++choice[b].first <= blocks[b].ones) break;
      choice[b].first = 1;
    }
    if (b == blocks.size()) break;
  }
  return out;
}

std::uint64_t tumble_set_size(const BinaryWord& w) {
  std::uint64_t product = 1;
  for (const auto& blk : descent_blocks(w.bits())) product *= blk.ones * blk.zeros;
  return product;
}

ReachSet<Permutation> stack_outputs(const Permutation& pi) {
  return ScheduleSearch(pi.entries(), false).run();
}

ReachSet<Permutation> pop_stack_outputs(const Permutation& pi) {
  return ScheduleSearch(pi.entries(), true).run();
}

ReachSet<Permutation> reach(const Permutation& pi, Machine machine, int t) {
  switch (machine) {
    case Machine::stack: return iterate_sets(pi, t, stack_outputs);
    case Machine::popstack: return iterate_sets(pi, t, pop_stack_outputs);
    default:
      throw std::invalid_argument("machine '" + std::string(to_string(machine)) +
                                  "' requires a binary word");
  }
}

ReachSet<BinaryWord> reach(const BinaryWord& w, Machine machine, int t) {
  switch (machine) {
    case Machine::tumble: return iterate_sets(w, t, tumble_set);
    case Machine::flip:
      return iterate_sets(w, t, [](const BinaryWord& x) {
        return ReachSet<BinaryWord>{flip_pass(x)};
      });
    default:
      throw std::invalid_argument("machine '" + std::string(to_string(machine)) +
                                  "' requires a permutation");
  }
}

bool sortable_in_series(const Permutation& pi, Machine machine, int t) {
  return reach(pi, machine, t).contains(Permutation::identity(pi.size()));
}

}  // namespace popstack
