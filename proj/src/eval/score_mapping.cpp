// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#include "astchunk/eval/score_mapping.hpp"

#include <algorithm>
#include <unordered_map>

#include "astchunk/size_metric.hpp"

namespace astchunk::eval {

std::optional<LineAggregation> aggregation_from_string(std::string_view name) {
  if (name == "mean") return LineAggregation::mean;
  if (name == "max") return LineAggregation::max;
  if (name == "sum") return LineAggregation::sum;
  return std::nullopt;
}

namespace {

// Lines whose first byte lies inside the record's span. `at_line_start` says
// whether the span opens a line.
LineSpan owned_lines(const ChunkRecord& r, bool at_line_start) {
  const std::string_view text = r.text;
  const std::size_t first_visible =
      std::ranges::find_if(text, [](char ch) { return !is_whitespace_byte(ch); }) - text.begin();
  std::size_t raw_first = r.start_line;
  if (first_visible < text.size()) {
    raw_first -= std::min<std::size_t>(
        raw_first - 1, std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(first_visible), '\n'));
  }
  std::size_t starts = at_line_start && !text.empty() ? 1 : 0;
  if (text.size() > 1) starts += std::count(text.begin(), text.end() - 1, '\n');
  const std::size_t first = raw_first + (at_line_start ? 0 : 1);
  if (starts == 0) return {first, first - 1};
  return {first, first + starts - 1};
}

}  // namespace

LineScores scores_to_lines(std::span<const ScoredChunk> chunks, std::size_t line_count) {
  LineScores scores(line_count, 0.0);
  std::vector<bool> covered(line_count, false);
  std::unordered_map<std::size_t, const ChunkRecord*> ending_at;
  for (const auto& c : chunks) ending_at.emplace(c.record->end_byte, c.record);

  auto cover = [&](std::size_t first, std::size_t last, double score) {
    first = std::max<std::size_t>(first, 1);
    last = std::min(last, line_count);
    for (std::size_t line = first; line <= last; ++line) {
      if (!covered[line - 1] || score > scores[line - 1]) scores[line - 1] = score;
      covered[line - 1] = true;
    }
  };
  for (const auto& c : chunks) {
    const ChunkRecord& r = *c.record;
    cover(r.start_line, r.end_line, c.score);
    bool at_line_start = r.start_byte == 0;
    if (!at_line_start) {
      const auto prev = ending_at.find(r.start_byte);
      at_line_start = prev != ending_at.end() && prev->second->text.ends_with('\n');
    }
    const LineSpan owned = owned_lines(r, at_line_start);
    if (owned.first <= owned.last) cover(owned.first, owned.last, c.score);
  }
  return scores;
}

ScoredList rescore_baseline_chunks(const std::map<std::string, LineScores>& line_scores,
                                   std::span<const ChunkRecord> baseline,
                                   LineAggregation aggregation) {
  static const LineScores kNone;
  ScoredList out;
  out.items.reserve(baseline.size());
  for (const auto& r : baseline) {
    const auto it = line_scores.find(r.path);
    const LineScores& lines = it == line_scores.end() ? kNone : it->second;
    double acc = 0.0;
    std::size_t n = 0;
    for (std::size_t line = std::max<std::size_t>(r.start_line, 1); line <= r.end_line; ++line, ++n) {
      const double s = line <= lines.size() ? lines[line - 1] : 0.0;
      acc = aggregation == LineAggregation::max ? (n == 0 ? s : std::max(acc, s)) : acc + s;
    }
    if (aggregation == LineAggregation::mean && n > 0) acc /= static_cast<double>(n);
    out.items.push_back({r.id, acc});
  }
  out.sort();
  return out;
}

ScoredList map_scores_onto_baseline(const ScoredList& ast_ranked,
                                    std::span<const ChunkRecord> ast_records,
                                    std::span<const ChunkRecord> baseline,
                                    LineAggregation aggregation) {
  std::unordered_map<std::string_view, double> score_of;
  for (const auto& item : ast_ranked.items) score_of.emplace(item.chunk_id, item.score);

  std::map<std::string, std::vector<ScoredChunk>> by_file;
  std::map<std::string, std::size_t> line_count;
  for (const auto& r : ast_records) {
    const auto it = score_of.find(r.id);
    by_file[r.path].push_back({&r, it == score_of.end() ? 0.0 : it->second});
    line_count[r.path] = std::max(line_count[r.path], r.end_line);
  }
  for (const auto& r : baseline) line_count[r.path] = std::max(line_count[r.path], r.end_line);

  std::map<std::string, LineScores> line_scores;
  for (const auto& [path, chunks] : by_file) {
    line_scores[path] = scores_to_lines(chunks, line_count[path]);
  }
  ScoredList out = rescore_baseline_chunks(line_scores, baseline, aggregation);
  out.query_id = ast_ranked.query_id;
  return out;
}

}  // namespace astchunk::eval
