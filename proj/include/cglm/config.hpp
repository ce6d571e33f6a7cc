#pragma once

// Plain-text run configuration: `key = value` lines, `#` comments.

#include <filesystem>
#include <string>
#include <vector>

#include "cglm/model.hpp"
#include "cglm/optim.hpp"

namespace cglm {

struct RunConfig {
  ModelConfig model;
  TrainConfig train;
  std::string data_dir = "data/prepared";
  std::string out_dir = "runs/default";
  bool deterministic = false;
  int precision = 32;  // 32 or 64

  // Applies one key. Throws ConfigError for unknown keys and bad values.
  void set(const std::string& key, const std::string& value);
  void validate() const;
  // Every key, in a form parse_config_text reads back unchanged.
  std::string to_text() const;
};

// Applies the file, then each `key=value` override in order, then validates.
// Errors name the key and where it came from (`file:line` or `--set`).
RunConfig parse_config_text(std::string_view text, const std::vector<std::string>& overrides = {},
                            const std::string& source = "<config>");
RunConfig parse_config(const std::filesystem::path& path,
                       const std::vector<std::string>& overrides = {});

}  // namespace cglm
