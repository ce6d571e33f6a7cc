#pragma once

// Causal sequence mixers: standard multi-head attention and the
// parameter-free replacements that compare each token with its predecessor
// and, optionally, with the running mean of all tokens so far.
//
// All mixers take [B, T, d] activations and are autoregressive: output row t
// depends on input rows 0..t only. The parameter-free mixers act on the full
// d-wide vector; heads exist only for attention.

#include <array>
#include <cstdint>
#include <string_view>

#include "cglm/autograd.hpp"

namespace cglm {

enum class MixerKind {
  attention,
  causal_max,
  causal_min,
  causal_pair_mean,
  causal_max_context,
  causal_min_context,
};

inline constexpr std::array<MixerKind, 6> kAllMixers = {
    MixerKind::attention,        MixerKind::causal_max,         MixerKind::causal_min,
    MixerKind::causal_pair_mean, MixerKind::causal_max_context, MixerKind::causal_min_context,
};

std::string_view to_string(MixerKind kind);
// Throws ConfigError on an unknown name.
MixerKind parse_mixer_kind(std::string_view name);
inline bool is_parameter_free(MixerKind kind) { return kind != MixerKind::attention; }

enum class PairOp { max, min, mean };
enum class ContextOp { max, min };

std::string_view to_string(ContextOp op);
ContextOp parse_context_op(std::string_view name);

// Elementary operation tally. Comparisons are max/min selections, additions
// include subtractions, multiplies count multiply-adds as one.
struct OpCounts {
  std::uint64_t comparisons = 0;
  std::uint64_t additions = 0;
  std::uint64_t multiplies = 0;
  std::uint64_t divisions = 0;
  std::uint64_t exps = 0;

  std::uint64_t total() const { return comparisons + additions + multiplies + divisions + exps; }
  friend bool operator==(const OpCounts&, const OpCounts&) = default;
};

namespace mix {

// Forward kernels on plain tensors. When `counts` is non-null the elementary
// operations actually executed are added to it.

// y_0 = x_0, y_t = op(x_t, x_{t-1}). Ties resolve to x_t.
template <class T>
Tensor<T> causal_pair(const Tensor<T>& x, PairOp op, OpCounts* counts = nullptr);

// c_t = (x_0 + ... + x_t) / (t + 1) by an inclusive Hillis-Steele scan over
// the time axis (ceil(log2 T) passes, pass k adds the row 2^k back).
template <class T>
Tensor<T> causal_prefix_mean(const Tensor<T>& x, OpCounts* counts = nullptr);

// Left-to-right running mean; reference for the scan.
template <class T>
Tensor<T> causal_prefix_mean_sequential(const Tensor<T>& x);

// y_t = op(x_t, x_{t-1}, c_t) with c the causal prefix mean; y_0 = op(x_0, c_0).
// Preference on ties: x_t, then x_{t-1}, then c_t.
template <class T>
Tensor<T> causal_context_mix(const Tensor<T>& x, ContextOp op, OpCounts* counts = nullptr);

// Causal multi-head attention core on fused projections qkv[B, T, 3d]
// laid out as [q | k | v]. Returns [B, T, d] with heads concatenated.
template <class T>
Tensor<T> causal_attention(const Tensor<T>& qkv, std::size_t n_head);

}  // namespace mix

// Differentiable forms of the mixers.
namespace ops {

template <class T>
Var<T> causal_pair(Var<T> x, PairOp op);
template <class T>
Var<T> causal_prefix_mean(Var<T> x);
template <class T>
Var<T> causal_context_mix(Var<T> x, ContextOp op);
template <class T>
Var<T> causal_attention(Var<T> qkv, std::size_t n_head);

// x[B,T,d] -> QKV projection with w_qkv[d, 3d] -> causal attention. The
// output projection is applied by the caller, identically for every mixer.
template <class T>
Var<T> attention(Var<T> x, Var<T> w_qkv, std::size_t n_head);

// Dispatches on kind. `w_qkv` is only read for attention.
template <class T>
Var<T> mix(Var<T> x, MixerKind kind, Var<T>* w_qkv, std::size_t n_head);

}  // namespace ops

// Naive per-position reference for every mixer kind: explicit loops, no scan,
// no vector kernels. Meant for small inputs in tests.
template <class T>
Tensor<T> mixer_oracle(const Tensor<T>& x, MixerKind kind, const Tensor<T>* w_qkv = nullptr,
                       std::size_t n_head = 1);

}  // namespace cglm
