#pragma once

#include <stdexcept>
#include <string>

namespace cglm {

// Every error raised by the library derives from Error so the CLI can map it
// to a one-line diagnostic with a stable category prefix.
class Error : public std::runtime_error {
 public:
  Error(std::string category, const std::string& what)
      : std::runtime_error(what), category_(std::move(category)) {}
  const std::string& category() const noexcept { return category_; }

 private:
  std::string category_;
};

struct DimensionError : Error {
  explicit DimensionError(const std::string& w) : Error("dimension", w) {}
};
struct ContractError : Error {
  explicit ContractError(const std::string& w) : Error("contract", w) {}
};
struct IndexError : Error {
  explicit IndexError(const std::string& w) : Error("index", w) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error("config", w) {}
};
struct LengthError : Error {
  explicit LengthError(const std::string& w) : Error("length", w) {}
};
struct DataError : Error {
  explicit DataError(const std::string& w) : Error("data", w) {}
};
struct LoadError : Error {
  explicit LoadError(const std::string& w) : Error("load", w) {}
};
struct TrainingError : Error {
  explicit TrainingError(const std::string& w) : Error("training", w) {}
};
struct BenchError : Error {
  explicit BenchError(const std::string& w) : Error("bench", w) {}
};

}  // namespace cglm
