// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "astchunk/corpus.hpp"
#include "astchunk/eval/metrics.hpp"

namespace astchunk::eval {

struct ScoredChunk {
  const ChunkRecord* record = nullptr;
  double score = 0.0;
};

/// Per-line scores of one file; index 0 is line 1.
using LineScores = std::vector<double>;

/// Each line covered by a scored chunk inherits its score (the highest one
/// when chunks share a line); uncovered lines score 0.
///
/// A chunk covers its start_line..end_line range plus every line that begins
/// inside its byte span, so chunks tiling a file leave no line uncovered.
/// Chunks must all come from the same file.
LineScores scores_to_lines(std::span<const ScoredChunk> chunks, std::size_t line_count);

enum class LineAggregation { mean, max, sum };

std::optional<LineAggregation> aggregation_from_string(std::string_view name);

/// Scores each baseline chunk from the line scores of its file and reranks.
/// Lines beyond a file's score vector count as 0.
ScoredList rescore_baseline_chunks(const std::map<std::string, LineScores>& line_scores,
                                   std::span<const ChunkRecord> baseline,
                                   LineAggregation aggregation = LineAggregation::mean);

/// Corpus-wide mapping: scores every AST chunk (missing ids score 0), builds
/// per-file line scores and reranks the baseline chunk set.
ScoredList map_scores_onto_baseline(const ScoredList& ast_ranked,
                                    std::span<const ChunkRecord> ast_records,
                                    std::span<const ChunkRecord> baseline,
                                    LineAggregation aggregation = LineAggregation::mean);

}  // namespace astchunk::eval
