// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "astchunk/corpus.hpp"
#include "astchunk/eval/metrics.hpp"

namespace astchunk::eval {

/// Splits on non-alphanumerics and camelCase boundaries, lowercased.
/// "parseHTTPRequest_v2" -> {"parse", "http", "request", "v2"}.
std::vector<std::string> tokenize_identifiers(std::string_view text);

struct Bm25Params {
  double k1 = 1.2;
  double b = 0.75;
};

/// Okapi BM25 over identifier tokens of chunk texts.
///
///   idf(t)   = ln(1 + (N - df + 0.5) / (df + 0.5))
///   score(q) = sum over distinct query terms of
///              idf * tf * (k1 + 1) / (tf + k1 * (1 - b + b * len / avglen))
class LexicalIndex {
 public:
  explicit LexicalIndex(std::span<const ChunkRecord> records, Bm25Params params = {});

  /// Top `k` chunks with a positive score. k == 0 returns every match.
  ScoredList search(std::string_view query, std::size_t k) const;

  double idf(std::string_view term) const;
  std::size_t document_count() const noexcept { return ids_.size(); }
  double average_length() const noexcept { return avg_len_; }

 private:
  Bm25Params params_;
  std::vector<std::string> ids_;
  std::vector<std::size_t> lengths_;
  double avg_len_ = 0.0;
  // term -> postings of (document, term frequency)
  std::unordered_map<std::string, std::vector<std::pair<std::size_t, std::size_t>>> postings_;
};

ScoredList lexical_retrieve(std::string_view query, std::span<const ChunkRecord> records,
                            std::size_t k);

}  // namespace astchunk::eval
