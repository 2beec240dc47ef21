#pragma once

// Levenshtein-based evaluation: pooled CER / WER and per-character error
// attribution from the alignment backtrace.

#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ocrlm::metrics {

/// Unit-cost edit distance between two sequences.
template <typename Seq>
std::size_t edit_distance(const Seq& a, const Seq& b) {
  const std::size_t n = std::size(a), m = std::size(b);
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  auto ia = std::begin(a);
  for (std::size_t i = 1; i <= n; ++i, ++ia) {
    cur[0] = i;
    auto jb = std::begin(b);
    for (std::size_t j = 1; j <= m; ++j, ++jb) {
      const std::size_t sub = prev[j - 1] + (*ia == *jb ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

std::vector<std::string> split_words(std::string_view s);

using TextPair = std::pair<std::string, std::string>;  // (reference, hypothesis)

struct CharStats {
  std::uint64_t errors = 0;
  std::uint64_t occurrences = 0;
  bool operator==(const CharStats&) const = default;
};

/// Marker for "no character" in confusion keys (deletion / insertion).
inline constexpr char kNone = '\0';

struct EvalResult {
  std::uint64_t char_edits = 0;
  std::uint64_t total_ref_chars = 0;
  std::uint64_t word_edits = 0;
  std::uint64_t total_ref_words = 0;
  std::uint64_t pairs = 0;
  std::map<char, CharStats> per_char;
  /// Inserted hypothesis characters have no reference character to blame.
  std::uint64_t insertions = 0;
  /// (reference, hypothesis) -> count; kNone on one side for deletions and
  /// insertions. Matches are not recorded.
  std::map<std::pair<char, char>, std::uint64_t> confusions;

  double cer() const;
  double wer() const;
  /// errors / occurrences, or negative when the character never occurs.
  double char_error_rate(char c) const;
  void add(std::string_view ref, std::string_view hyp);
  /// Associative, commutative merge of partial results.
  void merge(const EvalResult& other);
  bool operator==(const EvalResult&) const = default;
};

/// Pooled character error rate. Throws ValidationError when the references
/// contain no characters.
double cer(std::span<const TextPair> pairs);
/// Pooled word error rate over space-separated tokens.
double wer(std::span<const TextPair> pairs);
EvalResult per_char_errors(std::span<const TextPair> pairs);
EvalResult evaluate(std::span<const TextPair> pairs);

enum class EditOp { Match, Substitute, Delete, Insert };

/// Minimal alignment; ties prefer match, then substitution, deletion,
/// insertion (walking back from the end).
std::vector<EditOp> align(std::string_view ref, std::string_view hyp);

/// `metric,value` rows: cer, wer, ref_chars, ref_words, char_edits, ...
void write_summary_csv(std::ostream& os, const EvalResult& r);
/// One row per reference character: char,errors,occurrences,error_rate
void write_char_csv(std::ostream& os, const EvalResult& r);
void write_confusions_csv(std::ostream& os, const EvalResult& r);

}  // namespace ocrlm::metrics
