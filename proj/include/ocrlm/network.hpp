#pragma once

// Frame-wise OCR network: fully-connected ReLU feature layers, stacked
// bidirectional LSTMs with dropout on their outputs, and a linear projection
// to per-frame class scores. Training uses explicit reverse-mode (BPTT)
// gradients in 64-bit arithmetic.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ocrlm/tensor.hpp"

namespace ocrlm::net {

struct ModelConfig {
  int input_dim = 60;
  int fc_layers = 2;
  int fc_units = 60;
  int lstm_layers = 2;
  int lstm_units = 256;
  bool bidirectional = true;
  int num_classes = 28;  // 26 letters + space + CTC blank
  int max_time_steps = 700;
  double dropout = 0.5;

  int lstm_output_dim() const { return lstm_units * (bidirectional ? 2 : 1); }
  /// Throws ValidationError on non-positive dimensions or num_classes < 2.
  void validate() const;
  bool operator==(const ModelConfig&) const = default;
};

enum class Mode { Inference, Training };

/// Layout of the parameter set for a configuration (all zeros).
ParamSet make_param_layout(const ModelConfig& cfg);

/// Glorot-uniform feature/projection weights, scaled-uniform recurrent
/// weights, forget-gate bias +1.
ParamSet init_params(const ModelConfig& cfg, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Layer primitives. Matrices are row-major with one row per time step.

/// y = ReLU(x W + b); x is T x in, W is in x out.
void fc_forward(std::span<const double> x, std::size_t steps, const Tensor& w,
                const Tensor& b, std::span<double> y);

/// Given upstream dy and the layer output y, accumulates dW, db and writes
/// dx (if non-empty).
void fc_backward(std::span<const double> x, std::span<const double> y,
                 std::span<const double> dy, std::size_t steps, const Tensor& w,
                 Tensor& dw, Tensor& db, std::span<double> dx);

struct LstmWeights {
  const Tensor* wx;  // in x 4H, gate blocks ordered i, f, g, o
  const Tensor* wh;  // H x 4H
  const Tensor* b;   // 4H
};

/// One LSTM step. `gates` receives the post-activation i, f, g, o values
/// (4H) when non-empty. Throws NumericError on non-finite output.
void lstm_cell_forward(std::span<const double> x, std::span<const double> h_prev,
                       std::span<const double> c_prev, const LstmWeights& w,
                       std::span<double> h, std::span<double> c,
                       std::span<double> gates = {});

/// Per-direction record kept for BPTT.
struct LstmTrace {
  std::size_t steps = 0, units = 0;
  bool reverse = false;
  std::vector<double> gates;   // T x 4H (i, f, g, o after activation)
  std::vector<double> cell;    // T x H
  std::vector<double> hidden;  // T x H (in processing order, indexed by time)
};

/// Runs one direction over the sequence; hidden states are indexed by time
/// step regardless of direction.
void lstm_sequence_forward(std::span<const double> x, std::size_t steps, std::size_t in_dim,
                           const LstmWeights& w, bool reverse, LstmTrace& trace);

struct LstmGrads {
  Tensor* wx;
  Tensor* wh;
  Tensor* b;
};

/// BPTT for one direction. dh is T x H upstream gradient on the hidden
/// states; dx (T x in) is accumulated into.
void lstm_sequence_backward(std::span<const double> x, std::size_t in_dim,
                            const LstmWeights& w, const LstmTrace& trace,
                            std::span<const double> dh, const LstmGrads& g,
                            std::span<double> dx);

/// Forward || backward hidden states per time step: T x 2H.
std::vector<double> bilstm_forward(std::span<const double> x, std::size_t steps,
                                   std::size_t in_dim, const LstmWeights& fwd,
                                   const LstmWeights& bwd);

/// Inverted dropout. Training: zero with probability `rate`, scale survivors
/// by 1/(1-rate); inference: identity. Returns the per-element multiplier.
std::vector<double> dropout_mask(std::size_t n, double rate, Mode mode, std::uint64_t seed);
void dropout(std::span<double> x, double rate, Mode mode, std::uint64_t seed);

// ---------------------------------------------------------------------------

struct ForwardTrace {
  std::size_t steps = 0;
  std::span<const double> input;
  std::vector<std::vector<double>> fc_out;  // per FC layer, T x units
  struct LstmLayer {
    LstmTrace fwd, bwd;
    std::vector<double> mask;     // T x D dropout multipliers
    std::vector<double> dropped;  // T x D, input to the next layer
  };
  std::vector<LstmLayer> lstm;
  std::vector<double> logits;  // T x K
};

class Network {
 public:
  Network(ModelConfig cfg, ParamSet params);

  const ModelConfig& config() const { return cfg_; }
  const ParamSet& params() const { return params_; }
  ParamSet& params() { return params_; }

  /// Pre-softmax logits, T x num_classes. `frames` is T x input_dim.
  /// The trace (optional) records everything backward() needs.
  std::vector<double> forward(std::span<const double> frames, std::size_t steps, Mode mode,
                              std::uint64_t dropout_seed, ForwardTrace* trace = nullptr) const;

  /// Accumulates parameter gradients for upstream dlogits (T x K).
  /// Throws NumericError naming the parameter on a non-finite gradient.
  void backward(const ForwardTrace& trace, std::span<const double> dlogits,
                ParamSet& grads) const;

 private:
  LstmWeights lstm_weights(std::size_t layer, bool reverse) const;

  ModelConfig cfg_;
  ParamSet params_;
};

/// Row-wise softmax of a T x K matrix.
std::vector<double> softmax_rows(std::span<const double> logits, std::size_t k);

/// Throws NumericError naming the first parameter with a non-finite entry.
void check_finite(const ParamSet& p, std::string_view what);

}  // namespace ocrlm::net
