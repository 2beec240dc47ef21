#pragma once

#include <cstdint>
#include <string>

#include "ocrlm/tensor.hpp"

namespace ocrlm::net {

struct AdamConfig {
  double learning_rate = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct OptimizerState {
  std::string algorithm = "adam";
  AdamConfig config;
  ParamSet first_moment;
  ParamSet second_moment;
  std::uint64_t step = 0;
};

OptimizerState make_optimizer(const ParamSet& params, const AdamConfig& config = {});

/// One bias-corrected adaptive-moment update.
void optimizer_step(ParamSet& params, const ParamSet& grads, OptimizerState& state);

/// Rescales grads so their global L2 norm is at most max_norm; returns the
/// norm before clipping.
double clip_global_norm(ParamSet& grads, double max_norm);

}  // namespace ocrlm::net
