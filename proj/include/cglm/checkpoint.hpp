#pragma once

// Binary checkpoints. Layout, all integers little-endian:
//
//   "CGLM" | u32 version = 1 | u32 n + n bytes of key=value lines
//   u32 tensor count | per tensor: u32 n + name, u8 dtype (0 f32, 1 f64),
//                                  u8 rank, rank x u32 dims, payload
//
// The config block holds the model config plus iteration, best_val,
// adam_step and the escaped vocabulary. Optimizer moments are stored as
// tensors named adam.m.<param> and adam.v.<param>.

#include <cstdint>
#include <filesystem>
#include <limits>
#include <optional>
#include <string>

#include "cglm/model.hpp"
#include "cglm/optim.hpp"

namespace cglm {

struct CheckpointMeta {
  std::int64_t iteration = 0;  // completed optimizer steps
  double best_val = std::numeric_limits<double>::infinity();
  std::string vocab;  // UTF-8 symbols in id order; empty if unknown
};

template <class T>
struct Checkpoint {
  Model<T> model;
  CheckpointMeta meta;
  std::optional<AdamState<T>> adam;
};

// Serializes to a sibling temporary file and renames it over `path`, so a
// crash never leaves a half-written checkpoint behind.
template <class T>
void save_checkpoint(const std::filesystem::path& path, const Model<T>& model,
                     const CheckpointMeta& meta, const AdamState<T>* adam = nullptr);

// Throws LoadError on bad magic, unsupported version, dtype mismatch,
// unknown or missing tensors, wrong shapes, or truncation.
template <class T>
Checkpoint<T> load_checkpoint(const std::filesystem::path& path);

// As above, and throws ConfigError if the stored model config differs from
// `expected`.
template <class T>
Checkpoint<T> load_checkpoint(const std::filesystem::path& path, const ModelConfig& expected);

std::string escape_value(std::string_view raw);
std::string unescape_value(std::string_view escaped);

}  // namespace cglm
