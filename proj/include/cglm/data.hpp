#pragma once

// Character-level corpus handling: vocabulary, contiguous 90/10 split, and
// random next-token batches.

#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cglm/tensor.hpp"

namespace cglm {

std::u32string utf8_decode(std::string_view text);
std::string utf8_encode(std::u32string_view text);

class CharTokenizer {
 public:
  // Sorted unique code points of `text`. Throws DataError on empty input.
  static CharTokenizer build(std::string_view utf8_text);
  // From an already sorted, duplicate-free symbol list.
  static CharTokenizer from_symbols(std::u32string symbols);

  std::size_t vocab_size() const noexcept { return symbols_.size(); }
  const std::u32string& symbols() const noexcept { return symbols_; }
  // Throws DataError on characters outside the vocabulary.
  std::vector<std::int32_t> encode(std::string_view utf8_text) const;
  // Throws IndexError on ids outside [0, vocab_size).
  std::string decode(std::span<const std::int32_t> ids) const;
  // Id of `c`, or -1.
  std::int32_t id_of(char32_t c) const;

 private:
  std::u32string symbols_;
};

enum class Split { train, val };
std::string_view to_string(Split s);

struct TokenStore {
  std::vector<std::int32_t> train;
  std::vector<std::int32_t> val;

  // First floor(0.9 n) ids train, the rest validate. No shuffling.
  static TokenStore from_ids(std::span<const std::int32_t> ids, double train_fraction = 0.9);
  const std::vector<std::int32_t>& ids(Split s) const { return s == Split::train ? train : val; }
};

struct Batch {
  IdTensor x;  // [batch, block]
  IdTensor y;  // x shifted left by one
};

// `batch` uniform offsets o in [0, len - block - 1]; x = ids[o, o+block),
// y = ids[o+1, o+block+1). Throws DataError if the split is not longer than block.
Batch sample_batch(const TokenStore& store, Split split, std::size_t block, std::size_t batch,
                   std::mt19937_64& rng);

struct PreparedData {
  CharTokenizer tokenizer;
  TokenStore store;
};

// Reads a local file, or downloads http(s) URLs when built with libcurl.
std::string read_corpus(const std::string& path_or_url);

// Writes train.bin / val.bin (u16 little-endian ids) and vocab.txt (the
// vocabulary symbols in id order, UTF-8, no separators) into out_dir.
PreparedData prepare_corpus(std::string_view utf8_text, const std::filesystem::path& out_dir);
PreparedData load_prepared(const std::filesystem::path& dir);

}  // namespace cglm
