#pragma once

// Training loop, evaluation and the CSV loss log.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "cglm/data.hpp"
#include "cglm/model.hpp"
#include "cglm/optim.hpp"

namespace cglm {

struct LossRecord {
  std::int64_t iter = 0;
  Split split = Split::train;
  double loss = 0;
  double lr = 0;
  double ms_per_iter = 0;
  friend bool operator==(const LossRecord&, const LossRecord&) = default;
};

class LossLog {
 public:
  static constexpr std::string_view kHeader = "iter,split,loss,lr,ms_per_iter";

  // Throws TrainingError if iterations stop increasing within a split or
  // the loss is not finite.
  void append(const LossRecord& r);
  const std::vector<LossRecord>& records() const noexcept { return records_; }
  std::vector<LossRecord> series(Split split) const;
  // Last and lowest loss of a split; nullopt when the split has no rows.
  std::optional<LossRecord> final(Split split) const;
  std::optional<LossRecord> best(Split split) const;

  std::string to_csv() const;
  static std::string csv_row(const LossRecord& r);
  static LossLog parse_csv(std::string_view text, const std::string& source = "<csv>");
  static LossLog read_csv(const std::filesystem::path& path);

 private:
  std::vector<LossRecord> records_;
};

// Independent generator for (seed, counter, stream); lets a resumed run
// draw exactly the batches an uninterrupted run would have drawn.
std::mt19937_64 derived_rng(std::uint64_t seed, std::uint64_t counter, std::uint64_t stream);

struct EvalResult {
  double train = 0;
  double val = 0;
};

// Mean cross-entropy over tc.eval_iters fresh batches per split, drawn from
// `rng` (train split first). Runs without recording gradients.
template <class T>
EvalResult estimate_loss(Model<T>& model, const TokenStore& store, const TrainConfig& tc,
                         std::mt19937_64& rng);

struct TrainOptions {
  bool deterministic = false;  // ms_per_iter is written as 0
  bool resume = false;         // continue from out_dir/ckpt_last.bin if present
  std::ostream* progress = nullptr;
};

struct TrainResult {
  LossLog log;
  std::int64_t iterations = 0;
  double best_val = 0;
  double final_val = 0;
};

// Writes loss.csv, ckpt_best.bin (lowest validation loss) and ckpt_last.bin
// into out_dir. Evaluates at every multiple of eval_interval and after the
// last step. A non-finite loss throws TrainingError; the checkpoints from
// the previous evaluation stay in place.
template <class T>
TrainResult train(const ModelConfig& mcfg, const TrainConfig& tc, const PreparedData& data,
                  const std::filesystem::path& out_dir, const TrainOptions& opts = {});

}  // namespace cglm
