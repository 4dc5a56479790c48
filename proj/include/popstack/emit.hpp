#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "popstack/deterministic.hpp"
#include "popstack/lab.hpp"
#include "popstack/nondeterministic.hpp"

namespace popstack {

enum class Format { text, json, csv };

Format parse_format(std::string_view name);

class UnsupportedFormat : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Every emitter returns newline-terminated lines. Permutations in text and
// csv output use `style`; JSON always writes integer arrays.
std::string emit(const VerificationReport& report, Format format);
std::string emit(const CountTable& table, Format format);
std::string emit(const PassHistogram& histogram, Format format);
// Histogram rows for several lengths under one `n,passes,count` header.
std::string emit(const std::vector<PassHistogram>& histograms, Format format);
std::string emit(const PassTrace<Permutation>& trace, Format format,
                 TextStyle style = TextStyle::spaced);
std::string emit(const PassTrace<BinaryWord>& trace, Format format);
std::string emit(const ReachSet<Permutation>& set, Format format,
                 TextStyle style = TextStyle::spaced);
std::string emit(const ReachSet<BinaryWord>& set, Format format);

}  // namespace popstack
