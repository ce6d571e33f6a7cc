#pragma once

// AdamW with decoupled weight decay, global-norm gradient clipping and the
// linear-warmup + cosine learning-rate schedule.

#include <cstdint>
#include <string>
#include <vector>

#include "cglm/autograd.hpp"

namespace cglm {

struct TrainConfig {
  std::int64_t max_iters = 5000;
  double lr = 1e-3;
  std::int64_t lr_decay_iters = 5000;
  std::int64_t warmup_iters = 100;
  double min_lr = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.99;
  double weight_decay = 0.1;
  double grad_clip = 1.0;  // 0 disables clipping
  double adam_eps = 1e-8;
  std::int64_t eval_interval = 250;
  std::int64_t eval_iters = 200;
  std::int64_t log_interval = 0;  // 0: only evaluation lines
  std::size_t batch_size = 12;
  std::uint64_t seed = 1337;

  void validate() const;
  std::vector<std::pair<std::string, std::string>> to_kv() const;
  bool set(const std::string& key, const std::string& value);
  friend bool operator==(const TrainConfig&, const TrainConfig&) = default;
};

// Warmup: lr (iter+1)/(warmup+1); cosine from lr to min_lr over
// [warmup, lr_decay_iters]; min_lr afterwards.
double lr_at(std::int64_t iter, const TrainConfig& tc);

template <class T>
struct AdamState {
  std::int64_t step = 0;
  std::vector<Tensor<T>> m;
  std::vector<Tensor<T>> v;

  static AdamState zeros_like(const std::vector<Parameter<T>*>& params);
};

// Scales all gradients so their joint L2 norm is at most max_norm. Returns
// the norm before clipping. Throws TrainingError naming the first parameter
// holding a non-finite gradient.
template <class T>
double clip_grad_norm(const std::vector<Parameter<T>*>& params, double max_norm);

// One AdamW update with bias correction. Parameters with decay == false skip
// weight decay. Gradients are clipped first when tc.grad_clip > 0.
template <class T>
void adamw_step(const std::vector<Parameter<T>*>& params, AdamState<T>& state, double lr,
                const TrainConfig& tc);

}  // namespace cglm
