// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#include "astchunk/stats.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

namespace astchunk {
namespace {

double median(std::vector<std::size_t> values) {
  if (values.empty()) return 0.0;
  std::ranges::sort(values);
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return static_cast<double>(values[mid]);
  return (static_cast<double>(values[mid - 1]) + static_cast<double>(values[mid])) / 2.0;
}

double mean(const std::vector<std::size_t>& values) {
  if (values.empty()) return 0.0;
  const double sum = std::accumulate(values.begin(), values.end(), 0.0);
  return sum / static_cast<double>(values.size());
}

StatsSummary summarize(const std::vector<const ChunkRecord*>& records) {
  StatsSummary s;
  std::set<std::string_view> files;
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> lines;
  for (const ChunkRecord* r : records) {
    files.insert(r->path);
    sizes.push_back(r->size_non_ws);
    lines.push_back(r->end_line >= r->start_line ? r->end_line - r->start_line + 1 : 0);
  }
  s.file_count = files.size();
  s.chunk_count = records.size();
  s.mean_size = mean(sizes);
  s.median_size = median(sizes);
  s.max_size = sizes.empty() ? 0 : *std::ranges::max_element(sizes);
  s.mean_lines = mean(lines);
  s.median_lines = median(std::move(lines));
  return s;
}

nlohmann::ordered_json to_json(const StatsSummary& s) {
  return {{"file_count", s.file_count},   {"chunk_count", s.chunk_count},
          {"mean_size", s.mean_size},     {"median_size", s.median_size},
          {"max_size", s.max_size},       {"mean_lines", s.mean_lines},
          {"median_lines", s.median_lines}};
}

}  // namespace

StatsReport compute_stats(std::span<const ChunkRecord> records) {
  std::vector<const ChunkRecord*> all;
  std::map<std::string, std::vector<const ChunkRecord*>> by_language;
  for (const auto& r : records) {
    all.push_back(&r);
    by_language[r.language].push_back(&r);
  }
  StatsReport report;
  report.total = summarize(all);
  for (const auto& [language, subset] : by_language) {
    report.per_language[language] = summarize(subset);
  }
  return report;
}

std::string stats_to_json(const StatsReport& report) {
  nlohmann::ordered_json j = to_json(report.total);
  nlohmann::ordered_json languages = nlohmann::ordered_json::object();
  for (const auto& [language, summary] : report.per_language) languages[language] = to_json(summary);
  j["per_language"] = std::move(languages);
  return j.dump(2);
}

}  // namespace astchunk
