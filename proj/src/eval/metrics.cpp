// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#include "astchunk/eval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace astchunk::eval {
namespace {

void require_k(std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
}

std::size_t hits_at_k(const ScoredList& ranked, const Judgments& relevant, std::size_t k) {
  const std::size_t n = std::min(k, ranked.items.size());
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i) hits += relevant.contains(ranked.items[i].chunk_id) ? 1 : 0;
  return hits;
}

}  // namespace

void ScoredList::sort() {
  std::ranges::sort(items, [](const ScoredItem& a, const ScoredItem& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.chunk_id < b.chunk_id;
  });
}

bool judge(const ChunkRecord& chunk, std::span<const GoldSpan> gold) {
  const LineSpan lines{chunk.start_line, chunk.end_line};
  return std::ranges::any_of(gold, [&](const GoldSpan& g) {
    return g.path == chunk.path && lines.overlaps(g.lines);
  });
}

Judgments judge_all(std::span<const ChunkRecord> records, std::span<const GoldSpan> gold) {
  Judgments relevant;
  for (const auto& r : records) {
    if (judge(r, gold)) relevant.insert(r.id);
  }
  return relevant;
}

double precision_at_k(const ScoredList& ranked, const Judgments& relevant, std::size_t k) {
  require_k(k);
  return static_cast<double>(hits_at_k(ranked, relevant, k)) / static_cast<double>(k);
}

double recall_at_k(const ScoredList& ranked, const Judgments& relevant, std::size_t k) {
  require_k(k);
  if (relevant.empty()) return 0.0;
  return static_cast<double>(hits_at_k(ranked, relevant, k)) /
         static_cast<double>(relevant.size());
}

double ndcg_at_k(const ScoredList& ranked, const Judgments& relevant, std::size_t k) {
  require_k(k);
  if (relevant.empty()) return 0.0;
  double dcg = 0.0;
  const std::size_t n = std::min(k, ranked.items.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (relevant.contains(ranked.items[i].chunk_id)) dcg += 1.0 / std::log2(static_cast<double>(i) + 2.0);
  }
  double ideal = 0.0;
  const std::size_t m = std::min(k, relevant.size());
  for (std::size_t i = 0; i < m; ++i) ideal += 1.0 / std::log2(static_cast<double>(i) + 2.0);
  return dcg / ideal;
}

}  // namespace astchunk::eval
