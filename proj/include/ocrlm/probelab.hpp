#pragma once

// Probing experiments for the implicit character LM: shuffled sentences,
// n-gram class suites with context-length (plateau) estimation, per-character
// error matrices, and frequency-regulated n-gram sets.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ocrlm/glyphrender.hpp"
#include "ocrlm/metrics.hpp"
#include "ocrlm/textcorpus.hpp"
#include "ocrlm/trainer.hpp"

namespace ocrlm::probe {

enum class Kind { Shuffled, NGramSuite, CharMatrix, Regulated };
std::string_view to_string(Kind k);
/// Accepts the CLI names: shuffled, ngrams, charmatrix, regulated.
Kind parse_kind(std::string_view name);

struct ExperimentSpec {
  Kind kind = Kind::Shuffled;
  std::vector<std::string> fonts;
  std::vector<int> sizes{10, 11, 12};
  int n_min = 2;
  int n_max = 7;
  std::vector<corpus::NGramClass> classes{corpus::NGramClass::Seen, corpus::NGramClass::Unseen,
                                          corpus::NGramClass::PurelyUnseen};
  std::size_t cap = 10000;
  std::uint64_t seed = 1;
  // Purely-Unseen sets are only attempted up to this length; longer cells are
  // reported as skipped.
  int purely_unseen_max_n = 5;
  double plateau_tol = 0.1;  // percentage points
  int top_k = 3;
  std::string extra_chars;   // always included in the character matrix
  int matrix_n_max = 5;
  char regulate_char = 'e';
  std::optional<double> regulate_target;  // default: fraction in the Seen 2-gram set
  double regulate_tol = 0.005;
  bool per_size = false;     // add per-size rows next to the pooled ones
  bool parallel = true;

  /// Throws ValidationError for unknown fonts, sizes outside 8..16, or an
  /// n range outside 2..7.
  void validate(const render::FontCatalog& catalog) const;
};

/// One measured (or skipped) condition.
struct Cell {
  std::string font;
  int size = 0;            // 0 = pooled over all sizes
  std::string condition;   // normal / shuffled / seen / unseen / ... / regulated
  int n = 0;               // 0 when not an n-gram condition
  char ch = '\0';          // character-matrix rows only
  double cer = 0.0;        // percent
  double wer = 0.0;        // percent
  std::uint64_t samples = 0;
  std::uint64_t ref_chars = 0;
  double char_fraction = -1.0;  // regulated rows: fraction of the regulated char
  std::string skipped;     // non-empty: reason the cell has no value
  bool no_data = false;    // character matrix: character absent from references
};

struct ExperimentReport {
  Kind kind = Kind::Shuffled;
  std::vector<Cell> cells;
  std::vector<std::string> warnings;
  // Seen-column context length per font (n-gram suite only).
  std::map<std::string, int> plateau;
  std::map<std::string, double> frames_equivalent;
  int frames_size = 0;
  std::optional<int> plateau_estimate;        // over the widest font
  std::optional<double> frames_estimate;
  std::string widest_font;
  std::vector<std::pair<std::string, std::string>> provenance;

  const Cell* find(std::string_view font, std::string_view condition, int n = 0, char ch = '\0',
                   int size = 0) const;
};

/// Smallest n such that cer(n) - cer(m) < tol for every larger m in range.
/// Requires a contiguous range of at least three lengths.
int detect_plateau(const std::map<int, double>& cer_by_n, double tol);

double context_frames(int plateau_n, const render::GlyphFont& font, int size);

/// Text lines rendered in each configured font and size, decoded and pooled.
metrics::EvalResult evaluate_texts(const Recognizer& rec, const std::vector<std::string>& texts,
                                   const render::GlyphFont& font, const std::vector<int>& sizes,
                                   bool parallel);

/// Seed used for the (n, class) test set; shared by every experiment kind so
/// the suite, matrix and regulated runs see the same grams.
std::uint64_t ngram_set_seed(std::uint64_t seed, int n, corpus::NGramClass cls);

ExperimentReport run_shuffled(const Recognizer& rec, const corpus::SentenceSet& sentences,
                              const render::FontCatalog& catalog, const ExperimentSpec& spec);

ExperimentReport run_ngram_suite(const Recognizer& rec, const corpus::NGramInventory& inv,
                                 const render::FontCatalog& catalog, const ExperimentSpec& spec);

ExperimentReport run_char_matrix(const Recognizer& rec, const corpus::NGramInventory& inv,
                                 const render::FontCatalog& catalog, const ExperimentSpec& spec);

ExperimentReport run_regulated(const Recognizer& rec, const corpus::NGramInventory& inv,
                               const render::FontCatalog& catalog, const ExperimentSpec& spec);

/// Long format, one row per cell.
void write_csv(std::ostream& os, const ExperimentReport& r);
/// Aligned Markdown tables laid out per experiment kind.
void write_markdown(std::ostream& os, const ExperimentReport& r);
void write_provenance(std::ostream& os, const ExperimentReport& r);

/// Returns the transcript stored with the image; a perfect recognizer for
/// testing report plumbing.
class TranscriptOracle final : public Recognizer {
 public:
  std::string recognize(const render::LineImage& raw) const override { return raw.transcript; }
};

}  // namespace ocrlm::probe
