#pragma once

// Reverse-mode differentiation on a linear tape. Nodes are appended in
// evaluation order, so the tape is topologically sorted by construction and
// backward() simply walks it in reverse.

#include <cstddef>
#include <deque>
#include <functional>
#include <string>
#include <utility>

#include "cglm/tensor.hpp"

namespace cglm {

// Trainable leaf owned by a model. `decay` selects the weight-decay group.
template <class T>
struct Parameter {
  std::string name;
  Tensor<T> value;
  Tensor<T> grad;
  bool decay = true;

  Parameter(std::string n, Tensor<T> v, bool d)
      : name(std::move(n)), value(std::move(v)), grad(value.shape()), decay(d) {}
  void zero_grad() { grad.fill(T(0)); }
};

template <class T>
class Tape;

// Handle to a tape node.
template <class T>
struct Var {
  Tape<T>* tape = nullptr;
  std::size_t id = 0;

  const Tensor<T>& value() const { return tape->value(*this); }
  const Shape& shape() const { return value().shape(); }
  bool requires_grad() const { return tape->requires_grad(*this); }
};

template <class T>
class Tape {
 public:
  // Receives the node's output value and the gradient flowing into it.
  using BackwardFn = std::function<void(const Tensor<T>& out, const Tensor<T>& out_grad)>;

  explicit Tape(bool grad_enabled = true) : grad_enabled_(grad_enabled) {}
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  bool grad_enabled() const noexcept { return grad_enabled_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  Var<T> constant(Tensor<T> value) { return push(std::move(value), false, nullptr, {}); }
  // Leaf whose gradient is read back with grad() after backward().
  Var<T> input(Tensor<T> value) { return push(std::move(value), grad_enabled_, nullptr, {}); }
  // Leaf bound to a parameter; backward() sum-accumulates into param.grad.
  Var<T> param(Parameter<T>& p) { return push(p.value, grad_enabled_, &p, {}); }

  // Records an operation output. `backward` is dropped when no input needs
  // a gradient.
  Var<T> record(Tensor<T> value, bool any_input_requires_grad, BackwardFn backward) {
    const bool rg = grad_enabled_ && any_input_requires_grad;
    return push(std::move(value), rg, nullptr, rg ? std::move(backward) : BackwardFn{});
  }

  const Tensor<T>& value(Var<T> v) const { return nodes_.at(v.id).value; }
  bool requires_grad(Var<T> v) const { return nodes_.at(v.id).requires_grad; }

  // Gradient slot of a node, zero-initialized on first access. Returns
  // nullptr for nodes that do not require a gradient.
  Tensor<T>* grad_slot(Var<T> v) {
    Node& n = nodes_.at(v.id);
    if (!n.requires_grad) return nullptr;
    if (n.grad.size() == 0) n.grad = Tensor<T>(n.value.shape());
    return &n.grad;
  }

  // Gradient accumulated at a node after backward(); empty if none reached it.
  const Tensor<T>& grad(Var<T> v) const { return nodes_.at(v.id).grad; }

  void backward(Var<T> root) {
    Node& r = nodes_.at(root.id);
    if (r.value.size() != 1) {
      throw ContractError("backward() needs a scalar root, got shape " + shape_str(r.value.shape()));
    }
    if (!r.requires_grad) return;
    r.grad = Tensor<T>(r.value.shape(), T(1));
    for (std::size_t i = root.id + 1; i-- > 0;) {
      Node& n = nodes_[i];
      if (n.grad.size() == 0) continue;
      if (n.backward) n.backward(n.value, n.grad);
      if (n.param != nullptr) {
        T* dst = n.param->grad.data();
        const T* src = n.grad.data();
        for (std::size_t k = 0; k < n.grad.size(); ++k) dst[k] += src[k];
      }
    }
  }

  void clear() { nodes_.clear(); }

 private:
  struct Node {
    Tensor<T> value;
    Tensor<T> grad;
    bool requires_grad = false;
    Parameter<T>* param = nullptr;
    BackwardFn backward;
  };

  Var<T> push(Tensor<T> value, bool rg, Parameter<T>* p, BackwardFn fn) {
    nodes_.push_back(Node{std::move(value), Tensor<T>{}, rg, p, std::move(fn)});
    return Var<T>{this, nodes_.size() - 1};
  }

  bool grad_enabled_;
  std::deque<Node> nodes_;
};

}  // namespace cglm
