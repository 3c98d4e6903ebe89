// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "astchunk/corpus.hpp"
#include "astchunk/span.hpp"

namespace astchunk::eval {

struct GoldSpan {
  std::string path;
  LineSpan lines;  // 1-based inclusive
};

struct Query {
  std::string id;
  std::string text;
  std::vector<GoldSpan> gold;
};

struct ScoredItem {
  std::string chunk_id;
  double score = 0.0;
};

/// Ranked retrieval result, ordered by descending score then chunk id.
struct ScoredList {
  std::string query_id;
  std::vector<ScoredItem> items;

  void sort();
};

/// Ids of chunks judged relevant for one query.
using Judgments = std::unordered_set<std::string>;

/// Relevant iff the record's line range overlaps a gold span in the same file.
bool judge(const ChunkRecord& chunk, std::span<const GoldSpan> gold);

Judgments judge_all(std::span<const ChunkRecord> records, std::span<const GoldSpan> gold);

/// (#relevant in top k) / k. Throws std::invalid_argument when k == 0.
double precision_at_k(const ScoredList& ranked, const Judgments& relevant, std::size_t k);

/// (#relevant in top k) / |relevant|; 0 when nothing is relevant.
double recall_at_k(const ScoredList& ranked, const Judgments& relevant, std::size_t k);

/// Binary-gain nDCG with a 1/log2(rank + 1) discount; 0 when nothing is relevant.
double ndcg_at_k(const ScoredList& ranked, const Judgments& relevant, std::size_t k);

}  // namespace astchunk::eval
