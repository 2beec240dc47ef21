#pragma once

// Corpus ingestion, character n-gram inventory and the Seen / Unseen /
// Purely-Unseen test-set taxonomy.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ocrlm::corpus {

inline constexpr std::string_view kLetters = "abcdefghijklmnopqrstuvwxyz";

/// Occurrence count above which a gram is Seen.
inline constexpr std::uint64_t kSeenThreshold = 10;

/// Minimum number of grams a sampled test set must contain.
inline constexpr std::size_t kMinSamples = 50;

inline bool is_letter(char c) { return c >= 'a' && c <= 'z'; }

enum class SplitRole { Train, Validation, Test };

std::string_view to_string(SplitRole role);

struct SentenceSet {
  std::vector<std::string> sentences;
  SplitRole role = SplitRole::Train;
  std::string source_name;
};

/// What happens to characters outside a..z and space after lowercasing.
enum class AlphabetPolicy {
  Drop,     // remove the character ("don't" -> "dont")
  ToSpace,  // replace with a space ("daisy-chain" -> "daisy chain")
};

AlphabetPolicy parse_alphabet_policy(std::string_view name);

/// Splits on . ! ? ; then lowercases, filters, collapses whitespace and
/// removes duplicates keeping the first occurrence. Throws ValidationError
/// "no usable sentences" when nothing survives.
SentenceSet load_sentences(std::string_view raw_text, AlphabetPolicy policy,
                           SplitRole role = SplitRole::Train,
                           std::string source_name = {});

/// Merge sets in order, dropping sentences already present.
SentenceSet merge_unique(const std::vector<SentenceSet>& parts, SplitRole role,
                         std::string source_name);

/// Breaks sentences longer than max_chars at word boundaries; a single word
/// longer than max_chars is dropped. Result is re-deduplicated.
SentenceSet limit_length(const SentenceSet& s, std::size_t max_chars);

/// Keep the first `count` sentences (0 keeps everything).
SentenceSet take_first(const SentenceSet& s, std::size_t count);

void write_sentences(std::ostream& os, const SentenceSet& s);
SentenceSet read_sentences(std::istream& is, SplitRole role,
                           std::string source_name);

class NGramInventory {
 public:
  NGramInventory() = default;
  explicit NGramInventory(int max_n) : max_n_(max_n) {}

  int max_n() const { return max_n_; }
  std::uint64_t count(std::string_view gram) const;
  std::size_t size() const { return counts_.size(); }

  /// Adds every substring (length 1..max_n) of a space-free run.
  void add_run(std::string_view run);
  void set_count(std::string gram, std::uint64_t count);

  /// Keys of a given length with count strictly greater than `min_count`,
  /// sorted lexicographically.
  std::vector<std::string> keys_of_length(int n, std::uint64_t min_count) const;

  /// Sorted (gram, count) listing, the serialized order.
  std::vector<std::pair<std::string, std::uint64_t>> sorted_entries() const;

  bool operator==(const NGramInventory& other) const {
    return max_n_ == other.max_n_ && counts_ == other.counts_;
  }

 private:
  int max_n_ = 7;
  std::unordered_map<std::string, std::uint64_t> counts_;
};

NGramInventory build_ngram_inventory(const SentenceSet& s, int max_n);

/// Text format: "NGRAMS <max_n> <entries>" then "gram<TAB>count" lines in
/// lexicographic order.
void write_inventory(std::ostream& os, const NGramInventory& inv);
NGramInventory read_inventory(std::istream& is);

enum class NGramClass { Seen, Unseen, PurelyUnseen, Ignored };

std::string_view to_string(NGramClass c);
NGramClass parse_ngram_class(std::string_view name);

/// Purely-Unseen requires every substring of length 2..n-1 to have count 0
/// as well; for n = 2 every Unseen gram is Purely-Unseen.
NGramClass classify_ngram(const NGramInventory& inv, std::string_view gram);

/// True when a gram of class `actual` belongs in a test set of class
/// `wanted`. Purely-Unseen grams are also Unseen.
bool class_matches(NGramClass actual, NGramClass wanted);

struct NGramTestSet {
  int n = 0;
  NGramClass cls = NGramClass::Seen;
  std::vector<std::string> grams;
  std::size_t cap = 10000;
};

/// Seen: uniform sample without replacement from qualifying inventory keys.
/// Unseen / PurelyUnseen: rejection sampling of random letter strings with a
/// budget of cap * 1000 draws. Throws ValidationError "insufficient samples"
/// when fewer than kMinSamples qualify.
NGramTestSet sample_ngram_set(const NGramInventory& inv, int n, NGramClass cls,
                              std::size_t cap, std::uint64_t seed);

void write_lines(std::ostream& os, const std::vector<std::string>& lines);
std::vector<std::string> read_lines(std::istream& is);

/// Uniform random permutation of every character, spaces included.
std::string shuffle_sentence(std::string_view sentence, std::uint64_t seed);

/// Fraction of characters equal to ch over all grams.
double char_fraction(const std::vector<std::string>& grams, char ch);

/// Drops whole grams until the fraction of `ch` lies within `tolerance` of
/// `target_fraction`, removing as few grams as possible. Ties among grams
/// with equal counts of `ch` are broken by a seeded shuffle; the retained
/// grams keep their input order.
std::vector<std::string> regulate_character_frequency(
    const std::vector<std::string>& grams, char ch, double target_fraction,
    double tolerance, std::uint64_t seed);

}  // namespace ocrlm::corpus
