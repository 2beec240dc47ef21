#pragma once

// Connectionist Temporal Classification: loss and logit gradient by the
// log-domain forward-backward recursion, greedy best-path decoding and a
// brute-force alignment enumerator used as a test oracle.
//
// Convention: logits are T x K row-major, the blank is class K - 1.

#include <span>
#include <string>
#include <vector>

namespace ocrlm::ctc {

struct CtcResult {
  double nll = 0.0;          // -log P(target | x); +inf when infeasible
  std::vector<double> grad;  // d nll / d logits, T x K
  bool feasible = true;
  double log_likelihood_alpha = 0.0;
  double log_likelihood_beta = 0.0;
};

/// Minimum number of frames needed to emit `target`.
std::size_t min_frames(std::span<const int> target);

/// Infeasible targets (too few frames) give nll = +inf, zero gradient and
/// feasible = false rather than an exception. Invalid labels throw.
CtcResult ctc_loss(std::span<const double> logits, std::size_t steps, std::size_t classes,
                   std::span<const int> target);

/// Sum of the probabilities of every frame-label path that collapses to
/// `target`. Enumerates K^T paths; T must be at most 8.
double ctc_brute_force(std::span<const double> probs, std::size_t steps, std::size_t classes,
                       std::span<const int> target);

/// Per-frame argmax (lowest index wins ties), merge repeats, drop blanks.
std::vector<int> greedy_decode(std::span<const double> logits, std::size_t steps,
                               std::size_t classes);

/// Maps characters to class indices: a..z, optionally space, then blank.
class Alphabet {
 public:
  explicit Alphabet(bool with_space = true);
  int num_classes() const { return static_cast<int>(symbols_.size()) + 1; }
  int blank() const { return num_classes() - 1; }
  bool with_space() const { return symbols_.size() == 27; }
  /// Throws ValidationError for characters outside the alphabet.
  std::vector<int> encode(std::string_view text) const;
  std::string decode(std::span<const int> labels) const;

 private:
  std::string symbols_;
};

}  // namespace ocrlm::ctc
