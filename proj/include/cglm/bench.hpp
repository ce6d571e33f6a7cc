#pragma once

// Analytic operation counts and measured sequence-length scaling of the mixers.

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "cglm/mixers.hpp"

namespace cglm {

// Closed-form counts for one sequence of length T and width d.
struct OpCountModel {
  MixerKind kind = MixerKind::attention;
  OpCounts counts;  // what the implementation executes
  // Context mixers only: the two textbook scan costs, T d ceil(log2 T)
  // (parallel-depth accounting) and 2 T d (sequential running sum).
  std::uint64_t scan_parallel_bound = 0;
  std::uint64_t scan_sequential = 0;
};

// attention: 3 T d^2 projection and 2 T^2 d score/mix multiply-adds over the
// full T x T grid, plus per head T^2 max comparisons, subtractions, exps,
// sum additions and divisions in the softmax.
// causal_max/min: (T-1) d comparisons. causal_pair_mean: (T-1) d additions
// and halvings. Context mixers: (2T-1) d comparisons, the Hillis-Steele
// additions sum over offsets 2^k < T of (T - 2^k) d, and T d divisions.
OpCountModel count_ops(MixerKind kind, std::size_t T, std::size_t d, std::size_t n_head);

struct ScalingSpec {
  std::vector<MixerKind> kinds;
  std::vector<std::size_t> lengths = {64, 128, 256, 512, 1024};
  std::size_t d = 64;
  std::size_t n_head = 4;
  std::size_t batch = 8;
  std::size_t repetitions = 30;
  std::size_t warmup = 3;
  std::uint64_t seed = 0;
};

struct ScalingPoint {
  MixerKind kind = MixerKind::attention;
  std::size_t T = 0;
  std::size_t batch = 0;
  double median_ms = 0;
  double iqr_ms = 0;
  std::uint64_t ops_model = 0;  // count_ops(...).counts.total() x batch
};

struct ScalingReport {
  ScalingSpec spec;
  std::vector<ScalingPoint> points;
  std::vector<std::pair<MixerKind, double>> slopes;  // log-log, largest three T
  std::vector<std::string> notes;
  const ScalingPoint& at(MixerKind kind, std::size_t T) const;
  double slope(MixerKind kind) const;
};

// Input of repetition `rep` at length T: x[batch, T, d] ~ U(-1, 1), a pure
// function of (seed, rep, T, d, batch).
Tensor<float> bench_input(std::uint64_t seed, std::size_t rep, std::size_t T, std::size_t d,
                          std::size_t batch);

// Times every (kind, T) repetitions times, interleaving kinds and lengths
// within each repetition. Warm-up calls are not timed. When a median is
// under 20 ticks of the clock the batch is doubled and that cell remeasured;
// each widening is recorded in notes.
ScalingReport run_scaling(const ScalingSpec& spec);

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);
// Smallest observable steady_clock increment, in milliseconds.
double timer_resolution_ms();

std::string scaling_csv(const ScalingReport& report);
void write_scaling_csv(const std::filesystem::path& path, const ScalingReport& report);
void write_scaling_svg(const std::filesystem::path& path, const ScalingReport& report);

}  // namespace cglm
