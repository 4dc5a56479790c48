#include "popstack/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace popstack {

Permutation::Permutation(std::vector<Entry> entries) {
  const auto n = entries.size();
  std::vector<bool> seen(n + 1, false);
  for (Entry e : entries) {
    if (e < 1 || static_cast<std::size_t>(e) > n) {
      throw std::invalid_argument("entry " + std::to_string(e) +
                                  " outside 1.." + std::to_string(n));
    }
    if (seen[e]) {
      throw std::invalid_argument("duplicate entry " + std::to_string(e));
    }
    seen[e] = true;
  }
  entries_ = std::move(entries);
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Entry> e(n);
  std::iota(e.begin(), e.end(), 1);
  return unchecked(std::move(e));
}

bool is_identity(std::span<const Entry> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] != static_cast<Entry>(i + 1)) return false;
  }
  return true;
}

bool Permutation::is_identity() const { return popstack::is_identity(entries_); }

BinaryWord::BinaryWord(std::vector<std::uint8_t> bits) {
  for (auto b : bits) {
    if (b > 1) throw std::invalid_argument("binary word symbol must be 0 or 1");
  }
  bits_ = std::move(bits);
}

BinaryWord BinaryWord::from_mask(std::uint64_t mask, std::size_t length) {
  std::vector<std::uint8_t> bits(length);
  for (std::size_t i = 0; i < length; ++i) {
    bits[i] = static_cast<std::uint8_t>((mask >> (length - 1 - i)) & 1U);
  }
  return BinaryWord(std::move(bits));
}

BinaryWord BinaryWord::staircase(std::size_t ones, std::size_t zeros) {
  std::vector<std::uint8_t> bits(ones, 1);
  bits.resize(ones + zeros, 0);
  return BinaryWord(std::move(bits));
}

std::size_t BinaryWord::zero_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 0));
}

std::vector<std::size_t> BinaryWord::zero_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i] == 0) out.push_back(i);
  }
  return out;
}

bool BinaryWord::is_sorted() const {
  return std::is_sorted(bits_.begin(), bits_.end());
}

std::string BinaryWord::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

namespace {

bool is_delimiter(char c) {
  return c == ',' || std::isspace(static_cast<unsigned char>(c));
}

}  // namespace

Permutation parse_permutation(std::string_view text, TextStyle& style) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (is_delimiter(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !is_delimiter(text[j])) ++j;
    tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  if (tokens.empty()) throw ParseError("empty permutation");

  std::vector<Entry> entries;
  if (tokens.size() == 1 && tokens[0].size() > 1) {
    // Compact digit string; each digit is one entry.
    for (char c : tokens[0]) {
      if (c < '1' || c > '9') {
        throw ParseError("malformed token '" + std::string(tokens[0]) + "'");
      }
      entries.push_back(c - '0');
    }
    style = TextStyle::compact;
  } else {
    for (auto tok : tokens) {
      Entry value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw ParseError("malformed token '" + std::string(tok) + "'");
      }
      entries.push_back(value);
    }
    style = tokens.size() == 1 ? TextStyle::compact : TextStyle::spaced;
  }

  const auto n = entries.size();
  std::vector<bool> seen(n + 1, false);
  for (Entry e : entries) {
    if (e < 1 || static_cast<std::size_t>(e) > n) {
      throw ParseError("entry " + std::to_string(e) + " outside 1.." +
                       std::to_string(n));
    }
    if (seen[e]) throw ParseError("duplicate entry " + std::to_string(e));
    seen[e] = true;
  }
  return Permutation::unchecked(std::move(entries));
}

Permutation parse_permutation(std::string_view text) {
  TextStyle ignored{};
  return parse_permutation(text, ignored);
}

BinaryWord parse_binary_word(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty binary word");
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError("binary word contains '" + std::string(1, c) + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BinaryWord(std::move(bits));
}

std::string format_permutation(const Permutation& pi, TextStyle style) {
  std::string out;
  if (style == TextStyle::compact && pi.size() <= 9) {
    for (Entry e : pi) out += static_cast<char>('0' + e);
    return out;
  }
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(pi[i]);
  }
  return out;
}

RunDecomposition decreasing_runs(const Permutation& pi) {
  RunDecomposition d;
  const auto n = pi.size();
  std::size_t start = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (i == n || pi[i] > pi[i - 1]) {
      d.runs.push_back({start, i});
      start = i;
    }
  }
  return d;
}

BinaryWord project(const Permutation& pi, int k) {
  if (k < 0 || static_cast<std::size_t>(k) > pi.size()) {
    throw std::out_of_range("projection threshold " + std::to_string(k) +
                            " outside 0.." + std::to_string(pi.size()));
  }
  std::vector<std::uint8_t> bits(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) bits[i] = pi[i] > k ? 1 : 0;
  return BinaryWord(std::move(bits));
}

namespace {

// Extends a partial embedding of pattern[0..depth) into pi, choosing
// positions left to right and checking relative order against every
// previously placed symbol.
bool embed(std::span<const Entry> pi, std::span<const Entry> pattern,
           std::vector<std::size_t>& chosen, std::size_t from) {
  const auto depth = chosen.size();
  if (depth == pattern.size()) return true;
  const auto remaining = pattern.size() - depth;
  for (std::size_t pos = from; pos + remaining <= pi.size(); ++pos) {
    bool consistent = true;
    for (std::size_t j = 0; j < depth && consistent; ++j) {
      const bool want_less = pattern[j] < pattern[depth];
      const bool is_less = pi[chosen[j]] < pi[pos];
      consistent = want_less == is_less;
    }
    if (!consistent) continue;
    chosen.push_back(pos);
    if (embed(pi, pattern, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains(const Permutation& pi, const Pattern& sigma) {
  if (sigma.shape.size() > pi.size()) return false;
  std::vector<std::size_t> chosen;
  chosen.reserve(sigma.shape.size());
  return embed(pi.entries(), sigma.shape.entries(), chosen, 0);
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t rank(std::span<const Entry> entries) {
  const auto n = entries.size();
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (entries[j] < entries[i]) ++smaller;
    }
    r = r * (n - i) + smaller;
  }
  return r;
}

Permutation unrank(std::uint64_t index, int n) {
  std::vector<Entry> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<Entry> out;
  out.reserve(n);
  for (int i = n; i >= 1; --i) {
    const auto f = factorial(i - 1);
    const auto digit = index / f;
    index %= f;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation::unchecked(std::move(out));
}

PermutationStream::PermutationStream(int n) : n_(n) {
  if (n < 0 || n > kMaxStreamLength) {
    throw std::out_of_range("stream length " + std::to_string(n) +
                            " outside 0.." + std::to_string(kMaxStreamLength));
  }
}

PermutationStream::PermutationStream(int n, int first)
    : PermutationStream(n) {
  if (first < 1 || first > n) {
    throw std::out_of_range("first entry " + std::to_string(first) +
                            " outside 1.." + std::to_string(n));
  }
  first_ = first;
}

PermutationStream::iterator::iterator(int n, int first) : done_(false) {
  work_.resize(n);
  if (first > 0) {
    fixed_first_ = true;
    work_[0] = first;
    Entry next = 1;
    for (int i = 1; i < n; ++i) {
      if (next == first) ++next;
      work_[i] = next++;
    }
  } else {
    std::iota(work_.begin(), work_.end(), 1);
  }
  current_ = Permutation::unchecked(work_);
}

PermutationStream::iterator& PermutationStream::iterator::operator++() {
  const auto skip = fixed_first_ ? 1 : 0;
  if (!std::next_permutation(work_.begin() + skip, work_.end())) {
    done_ = true;
  } else {
    current_ = Permutation::unchecked(work_);
  }
  return *this;
}

PermutationStream all_permutations(int n) { return PermutationStream(n); }

PermutationStream permutations_with_first(int n, int first) {
  return PermutationStream(n, first);
}

}  // namespace popstack
