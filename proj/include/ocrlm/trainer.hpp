#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ocrlm/ctc.hpp"
#include "ocrlm/dataset.hpp"
#include "ocrlm/network.hpp"
#include "ocrlm/optimizer.hpp"

namespace ocrlm {

/// Anything that turns an unnormalized line image into text. Implementations
/// must be safe to call concurrently.
class Recognizer {
 public:
  virtual ~Recognizer() = default;
  virtual std::string recognize(const render::LineImage& raw) const = 0;
};

class NetworkRecognizer final : public Recognizer {
 public:
  NetworkRecognizer(const net::Network& net, ctc::Alphabet alphabet)
      : net_(net), alphabet_(std::move(alphabet)) {}
  std::string recognize(const render::LineImage& raw) const override;

 private:
  const net::Network& net_;
  ctc::Alphabet alphabet_;
};

/// Decodes every image; output order follows input order. The parallel path
/// fans out over OpenMP threads.
std::vector<std::string> recognize_all(const Recognizer& rec,
                                       std::span<const render::LineImage> images,
                                       bool parallel = true);
std::vector<std::string> recognize_all(const Recognizer& rec,
                                       std::span<const data::RawLine> lines,
                                       bool parallel = true);

}  // namespace ocrlm

namespace ocrlm::net {

struct TrainConfig {
  std::size_t batch_size = 8;
  int epochs = 1;
  std::uint64_t max_steps = 0;  // 0 = no limit
  std::uint64_t eval_interval = 500;
  int patience = 3;             // evaluations without improvement
  double max_minutes = 0.0;     // wall-clock budget, 0 = none
  double clip_norm = 5.0;
  AdamConfig adam;
  std::uint64_t seed = 1;       // data order and dropout
  std::size_t val_limit = 0;    // evaluate on the first N validation lines
  bool parallel = true;
};

struct BatchGradient {
  ParamSet grads;  // mean over the feasible samples
  double loss_sum = 0.0;
  std::size_t used = 0;
  std::size_t skipped = 0;  // CTC-infeasible samples
};

/// Per-sample forward/backward fanned out over threads; per-sample gradients
/// are summed in sample order, so the result does not depend on the thread
/// count.
BatchGradient batch_gradient(const Network& net, const ctc::Alphabet& alphabet,
                             std::span<const data::RawLine* const> batch,
                             std::uint64_t dropout_seed, bool parallel);

struct LogRow {
  std::uint64_t step = 0;
  int epoch = 0;
  double train_loss = 0.0;
  double val_cer = 0.0;
  double val_wer = 0.0;
  double lr = 0.0;
};

void write_log_header(std::ostream& os);
void write_log_row(std::ostream& os, const LogRow& row);

struct TrainResult {
  std::uint64_t steps = 0;
  int epochs_completed = 0;
  double best_val_cer = 1e300;
  double best_val_wer = 0.0;
  std::string stop_reason;
  std::vector<LogRow> log;
  double seconds = 0.0;
};

using ProgressFn = std::function<void(const LogRow&)>;

/// Mini-batch training with per-seed shuffled order, periodic validation and
/// early stopping. The network ends holding the best validation parameters.
/// On a non-finite loss the parameters are rolled back to the last
/// evaluated state and NumericError is thrown.
TrainResult train(Network& net, const ctc::Alphabet& alphabet,
                  std::span<const data::RawLine> train_set,
                  std::span<const data::RawLine> val_set, const TrainConfig& cfg,
                  const ProgressFn& progress = {});

/// Number of optimizer steps one epoch takes.
std::uint64_t steps_per_epoch(std::size_t samples, std::size_t batch_size);

}  // namespace ocrlm::net
