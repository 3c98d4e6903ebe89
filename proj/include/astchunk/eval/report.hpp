// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "astchunk/corpus.hpp"
#include "astchunk/eval/metrics.hpp"
#include "astchunk/eval/score_mapping.hpp"

namespace astchunk::eval {

/// Queries file: one JSON object per line,
/// {"id", "text", "gold": [{"path", "start_line", "end_line"}]}.
/// Throws MalformedRecord or IoError.
std::vector<Query> read_queries(std::istream& in);
std::vector<Query> read_queries(const std::filesystem::path& path);

struct MetricsAtK {
  double ndcg = 0.0;
  double precision = 0.0;
  double recall = 0.0;
};

struct ColumnReport {
  std::map<std::size_t, MetricsAtK> at_k;  // macro averages
  std::size_t evaluated_queries = 0;
  std::size_t zero_relevant_queries = 0;  // excluded from the averages
  double mean_context_chunks = 0.0;
};

struct QueryReport {
  std::string id;
  // column -> k -> metrics; absent when the query had no relevant chunk
  std::map<std::string, std::optional<std::map<std::size_t, MetricsAtK>>> columns;
};

struct EvalOptions {
  std::vector<std::size_t> ks{5, 10};
  std::size_t context_budget = 4000;
  LineAggregation aggregation = LineAggregation::mean;
};

/// Column names in the report.
inline constexpr const char* kAstColumn = "ast";
inline constexpr const char* kBaselineColumn = "baseline";
inline constexpr const char* kMappedColumn = "ast_mapped";

struct EvalReport {
  std::vector<std::size_t> ks;
  std::size_t query_count = 0;
  std::size_t context_budget = 0;
  std::map<std::string, ColumnReport> columns;
  std::vector<QueryReport> queries;
};

/// Runs the lexical retriever over both chunk sets, maps AST scores onto the
/// baseline chunks, and macro-averages nDCG/Precision/Recall at each k.
EvalReport evaluate(std::span<const ChunkRecord> ast_records,
                    std::span<const ChunkRecord> baseline_records, std::span<const Query> queries,
                    const EvalOptions& options = {});

std::string report_to_json(const EvalReport& report);

}  // namespace astchunk::eval
