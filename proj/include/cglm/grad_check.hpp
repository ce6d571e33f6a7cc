#pragma once

// Central-difference gradient checker. Intended for 64-bit tapes; in 32-bit
// the truncation/rounding tradeoff makes 1e-4 agreement unreliable.

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "cglm/autograd.hpp"

namespace cglm {

struct GradCheckResult {
  double max_rel_error = 0;
  std::vector<double> autodiff;
  std::vector<double> numeric;
  // Coordinates where a max/min switch lies within h of the point: the
  // one-sided slopes disagree, or the central differences at h and h/2 do.
  // Central differences are meaningless there; callers should pick a
  // different point.
  std::size_t kinks = 0;
};

// Gradients below the floor are compared absolutely: a 64-bit central
// difference with h = 1e-5 carries roughly 1e-10 of rounding noise.
inline constexpr double kGradFloor = 1e-6;

inline double relative_error(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), kGradFloor});
}

namespace detail {
// f at x + h, x - h, x + h/2, x - h/2.
struct Probe {
  double up, down, half_up, half_down;
};

// On a smooth function the two central differences agree to O(h^2), about
// 1e-10 here; a switch inside the step shifts them by the slope jump.
inline bool is_kink(const Probe& p, double mid, double h) {
  const double fwd = (p.up - mid) / h, bwd = (mid - p.down) / h;
  if (std::abs(fwd - bwd) > 1e-3 + 1e-2 * std::max(std::abs(fwd), std::abs(bwd))) return true;
  const double c = (p.up - p.down) / (2 * h), c_half = (p.half_up - p.half_down) / h;
  return std::abs(c - c_half) > 1e-9 + 1e-5 * std::max(std::abs(c), std::abs(c_half));
}
}  // namespace detail

// f maps an input leaf to a scalar. Compares d f / d x from backward() with
// (f(x + h e_i) - f(x - h e_i)) / 2h for every coordinate i.
template <class T>
GradCheckResult grad_check(const std::function<Var<T>(Tape<T>&, Var<T>)>& f, const Tensor<T>& x,
                           T h = T(1e-5)) {
  GradCheckResult res;
  {
    Tape<T> tape;
    Var<T> xv = tape.input(x);
    tape.backward(f(tape, xv));
    const Tensor<T>& g = tape.grad(xv);
    res.autodiff.assign(x.size(), 0.0);
    for (std::size_t i = 0; i < g.size(); ++i) res.autodiff[i] = static_cast<double>(g[i]);
  }
  auto eval = [&](const Tensor<T>& at) {
    Tape<T> tape(false);
    return static_cast<double>(f(tape, tape.input(at)).value().item());
  };
  const double mid = eval(x);
  Tensor<T> probe = x;
  auto at = [&](std::size_t i, T v) {
    probe[i] = v;
    const double r = eval(probe);
    probe[i] = x[i];
    return r;
  };
  for (std::size_t i = 0; i < x.size(); ++i) {
    const detail::Probe pr{at(i, x[i] + h), at(i, x[i] - h), at(i, x[i] + h / 2), at(i, x[i] - h / 2)};
    res.kinks += detail::is_kink(pr, mid, static_cast<double>(h));
    const double num = (pr.up - pr.down) / (2.0 * static_cast<double>(h));
    res.numeric.push_back(num);
    res.max_rel_error = std::max(res.max_rel_error, relative_error(res.autodiff[i], num));
  }
  return res;
}

// Same check over every element of a set of parameters. `loss` builds the
// scalar on the tape it is handed, binding the parameters with tape.param().
template <class T>
GradCheckResult grad_check_params(const std::function<Var<T>(Tape<T>&)>& loss,
                                  std::span<Parameter<T>* const> params, T h = T(1e-5)) {
  GradCheckResult res;
  for (Parameter<T>* p : params) p->zero_grad();
  {
    Tape<T> tape;
    tape.backward(loss(tape));
  }
  for (Parameter<T>* p : params) {
    for (T g : p->grad.storage()) res.autodiff.push_back(static_cast<double>(g));
  }
  auto eval = [&] {
    Tape<T> tape(false);
    return static_cast<double>(loss(tape).value().item());
  };
  const double mid = eval();
  std::size_t idx = 0;
  for (Parameter<T>* p : params) {
    for (std::size_t i = 0; i < p->value.size(); ++i, ++idx) {
      const T orig = p->value[i];
      auto at = [&](T v) {
        p->value[i] = v;
        const double r = eval();
        p->value[i] = orig;
        return r;
      };
      const detail::Probe pr{at(orig + h), at(orig - h), at(orig + h / 2), at(orig - h / 2)};
      res.kinks += detail::is_kink(pr, mid, static_cast<double>(h));
      const double num = (pr.up - pr.down) / (2.0 * static_cast<double>(h));
      res.numeric.push_back(num);
      res.max_rel_error = std::max(res.max_rel_error, relative_error(res.autodiff[idx], num));
    }
  }
  return res;
}

}  // namespace cglm
