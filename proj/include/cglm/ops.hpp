#pragma once

// Differentiable tensor operations. Every op reads its inputs, writes a fresh
// output, and registers the matching backward rule on the inputs' tape.

#include <cstdint>
#include <optional>
#include <vector>

#include "cglm/autograd.hpp"

namespace cglm::ops {

// a[..., k] x b[k, n] -> [..., n]. Leading axes of `a` are flattened into rows.
template <class T>
Var<T> matmul(Var<T> a, Var<T> b);

// a[..., k] x b[n, k]^T -> [..., n]; used by the tied LM head.
template <class T>
Var<T> matmul_bt(Var<T> a, Var<T> b);

// Elementwise sum of two same-shaped tensors.
template <class T>
Var<T> add(Var<T> a, Var<T> b);

// x[..., R, C] + row_block[R, C], repeated over the leading axes.
template <class T>
Var<T> add_broadcast(Var<T> x, Var<T> row_block);

template <class T>
Var<T> mul(Var<T> a, Var<T> b);

template <class T>
Var<T> scale(Var<T> x, T factor);

// Sum of all elements, rank-0 result.
template <class T>
Var<T> sum(Var<T> x);

// Gathers rows of table[V, d] for every id; output shape ids.shape + [d].
template <class T>
Var<T> embedding(Var<T> table, const IdTensor& ids);

// Tanh approximation: 0.5 x (1 + tanh(sqrt(2/pi) (x + 0.044715 x^3))).
template <class T>
Var<T> gelu(Var<T> x);

// Allowed-position pattern of shape [rows, cols], tiled over the leading
// axes of a softmax input whose last two axes are [rows, cols].
struct Mask {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> allowed;  // row-major, nonzero = may attend

  static Mask causal(std::size_t t);
};

// Softmax over the last axis with max-subtraction. Masked entries come out
// exactly 0; a row without any allowed entry is a ContractError.
template <class T>
Var<T> softmax_lastdim(Var<T> x, const std::optional<Mask>& mask = std::nullopt);

inline constexpr double kLayerNormEps = 1e-5;

// Per-row standardization over the last axis, then elementwise weight.
template <class T>
Var<T> layer_norm(Var<T> x, Var<T> weight);

// Mean over positions of -log softmax(logits)[target]; rank-0 result.
template <class T>
Var<T> cross_entropy(Var<T> logits, const IdTensor& targets);

// Plain-value helpers shared with the mixers and the oracle.
template <class T>
T gelu_value(T x);
template <class T>
T gelu_derivative(T x);

// Stable softmax of one row, in place, over the first `valid` entries; the
// remainder is zeroed. Throws ContractError when valid == 0.
template <class T>
void softmax_row(T* row, std::size_t n, std::size_t valid);

}  // namespace cglm::ops
