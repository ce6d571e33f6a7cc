#pragma once

// Decoder-only language model with a pluggable sequence mixer.
//
//   tokens -> wte + wpe -> n_layer x [ln_1 -> mixer -> c_proj -> +res,
//                                    ln_2 -> feed-forward -> +res]
//          -> ln_f -> logits through the tied token embedding
//
// Linear layers carry no bias and layer norms carry no bias, so the optimizer
// sees matrices (decayed) and norm weights (not decayed) only.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cglm/autograd.hpp"
#include "cglm/mixers.hpp"

namespace cglm {

// Where the parameter-free generative function enters the feed-forward layer.
enum class MlpMode {
  gelu,                     // d -> 4d -> GELU -> d
  generative_post_up,       // d -> 4d -> context mix -> d
  generative_inner_simple,  // d -> d -> context mix -> d
  generative_pre,           // context mix -> d -> 4d -> GELU -> d
};

inline constexpr std::array<MlpMode, 4> kAllMlpModes = {
    MlpMode::gelu, MlpMode::generative_post_up, MlpMode::generative_inner_simple,
    MlpMode::generative_pre};

std::string_view to_string(MlpMode mode);
MlpMode parse_mlp_mode(std::string_view name);

struct ModelConfig {
  std::size_t n_layer = 4;
  std::size_t n_head = 4;
  std::size_t n_embd = 128;
  std::size_t block_size = 64;
  std::size_t vocab_size = 65;
  MixerKind mixer = MixerKind::attention;
  MlpMode mlp_mode = MlpMode::gelu;
  ContextOp mlp_op = ContextOp::min;  // op of the generative MLP activation
  double dropout = 0.0;

  // Throws ConfigError naming the offending field.
  void validate() const;
  std::size_t mlp_inner() const {
    return mlp_mode == MlpMode::generative_inner_simple ? n_embd : 4 * n_embd;
  }
  // Ordered key=value form used by checkpoints and resolved configs.
  std::vector<std::pair<std::string, std::string>> to_kv() const;
  // Applies one key; returns false if the key is not a model key.
  bool set(const std::string& key, const std::string& value);

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

struct ParamCounts {
  std::size_t decayed = 0;
  std::size_t non_decayed = 0;
  // Everything except the position embedding, the usual headline figure.
  std::size_t reported_total = 0;
};

template <class T>
class Model {
 public:
  // Weights ~ N(0, 0.02); residual output projections ~ N(0, 0.02 / sqrt(2 n_layer));
  // norm weights 1. Fully determined by `seed`.
  Model(const ModelConfig& cfg, std::uint64_t seed);

  const ModelConfig& config() const noexcept { return cfg_; }

  std::vector<Parameter<T>*> parameters();
  std::vector<const Parameter<T>*> parameters() const;
  Parameter<T>& parameter(const std::string& name);
  Parameter<T>& token_embedding() { return params_[wte_]; }

  // tokens[B, T] -> logits[B, T, vocab]. Throws LengthError if T > block_size.
  Var<T> forward(Tape<T>& tape, const IdTensor& tokens);
  // Mean next-token cross-entropy.
  Var<T> loss(Tape<T>& tape, const IdTensor& tokens, const IdTensor& targets);

  void zero_grad();

 private:
  struct Block {
    std::size_t ln_1, c_attn, attn_proj, ln_2, c_fc, mlp_proj;
  };
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t add_param(std::string name, Shape shape, bool decay);
  Var<T> feed_forward(Tape<T>& tape, Var<T> h, const Block& blk);

  ModelConfig cfg_;
  std::vector<Parameter<T>> params_;
  std::size_t wte_ = 0, wpe_ = 0, ln_f_ = 0;
  std::vector<Block> blocks_;
};

template <class T>
ParamCounts count_params(const Model<T>& model);

// Closed form of count_params for a config, without building weights.
ParamCounts count_params(const ModelConfig& cfg);

struct SampleOptions {
  std::size_t n_new = 100;
  double temperature = 1.0;
  std::optional<std::size_t> top_k;
  std::uint64_t seed = 0;
  // Token used when the prompt is empty (the newline id for text models).
  std::int32_t empty_prompt_token = 0;
  // Ids >= this are never sampled (padding rows of an oversized vocabulary).
  std::optional<std::size_t> vocab_limit;
};

// Autoregressive sampling; the context is cropped to the last block_size
// tokens. top_k == 1 is greedy argmax decoding.
template <class T>
std::vector<std::int32_t> generate(Model<T>& model, std::vector<std::int32_t> prompt,
                                   const SampleOptions& opts);

}  // namespace cglm
