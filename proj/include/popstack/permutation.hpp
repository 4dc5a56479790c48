#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace popstack {

using Entry = int;

// Hard cap on the length of exhaustive permutation streams.
inline constexpr int kMaxStreamLength = 16;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One-line word over {1..n}, each symbol exactly once.
class Permutation {
 public:
  Permutation() = default;

  // Throws std::invalid_argument unless entries are exactly {1..n}.
  explicit Permutation(std::vector<Entry> entries);
  Permutation(std::initializer_list<Entry> entries)
      : Permutation(std::vector<Entry>(entries)) {}

  // Caller guarantees the invariant; used by generators and kernels.
  static Permutation unchecked(std::vector<Entry> entries) {
    Permutation p;
    p.entries_ = std::move(entries);
    return p;
  }

  static Permutation identity(std::size_t n);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Entry operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Entry> entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_identity() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Entry> entries_;
};

bool is_identity(std::span<const Entry> entries);
inline bool is_identity(const Permutation& pi) { return pi.is_identity(); }

// Finite word over {0,1}.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::vector<std::uint8_t> bits);

  // Word of `length` bits taken from `mask`, most significant bit first.
  static BinaryWord from_mask(std::uint64_t mask, std::size_t length);
  // 1^ones 0^zeros
  static BinaryWord staircase(std::size_t ones, std::size_t zeros);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  std::size_t zero_count() const;
  // 0-based positions of the zeros, left to right.
  std::vector<std::size_t> zero_positions() const;
  // True iff the word has the form 0^a 1^b.
  bool is_sorted() const;

  std::string to_string() const;

  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// A small permutation used as a pattern (231, 312, ...).
struct Pattern {
  Permutation shape;
};

// Half-open 0-based index range [first, last).
struct IndexRange {
  std::size_t first = 0;
  std::size_t last = 0;
  std::size_t length() const { return last - first; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

// Partition of a permutation's index range into maximal decreasing runs.
struct RunDecomposition {
  std::vector<IndexRange> runs;
  std::size_t size() const { return runs.size(); }
};

enum class TextStyle { spaced, compact };

// Accepts "4 6 3 1 5 2", "4,6,3,1,5,2" or, when every value is at most 9,
// the digit string "463152". Throws ParseError.
Permutation parse_permutation(std::string_view text);
// Same, also reporting which of the two spellings the input used.
Permutation parse_permutation(std::string_view text, TextStyle& style);

// Contiguous 0/1 string. Throws ParseError.
BinaryWord parse_binary_word(std::string_view text);

// Compact style requires every entry to be at most 9.
std::string format_permutation(const Permutation& pi,
                               TextStyle style = TextStyle::spaced);

RunDecomposition decreasing_runs(const Permutation& pi);

// Position i is 0 iff pi(i) <= k, so the word has exactly k zeros and
// k = 0, k = n give 1^n and 0^n. Requires 0 <= k <= n.
BinaryWord project(const Permutation& pi, int k);

bool contains(const Permutation& pi, const Pattern& sigma);
inline bool avoids(const Permutation& pi, const Pattern& sigma) {
  return !contains(pi, sigma);
}

// Lexicographic rank in S_n (Lehmer code). Valid for n <= 20.
std::uint64_t rank(std::span<const Entry> entries);
Permutation unrank(std::uint64_t index, int n);
std::uint64_t factorial(int n);

// Every permutation of length n exactly once, in lexicographic order.
// A stream can be restricted to the permutations with a given first entry;
// the sub-streams for first = 1..n partition the full stream.
class PermutationStream {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.done_;
    }

   private:
    friend class PermutationStream;
    iterator(int n, int first);

    Permutation current_;
    std::vector<Entry> work_;
    bool fixed_first_ = false;
    bool done_ = true;
  };

  // Throws std::out_of_range when n is negative or above kMaxStreamLength.
  explicit PermutationStream(int n);
  PermutationStream(int n, int first);

  iterator begin() const { return iterator(n_, first_); }
  std::default_sentinel_t end() const { return {}; }

  int length() const { return n_; }

 private:
  int n_;
  int first_ = 0;
};

PermutationStream all_permutations(int n);
PermutationStream permutations_with_first(int n, int first);

}  // namespace popstack
