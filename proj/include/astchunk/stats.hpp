// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "astchunk/corpus.hpp"

namespace astchunk {

struct StatsSummary {
  std::size_t file_count = 0;
  std::size_t chunk_count = 0;
  double mean_size = 0.0;
  double median_size = 0.0;
  std::size_t max_size = 0;
  double mean_lines = 0.0;
  double median_lines = 0.0;

  friend bool operator==(const StatsSummary&, const StatsSummary&) = default;
};

struct StatsReport {
  StatsSummary total;
  std::map<std::string, StatsSummary> per_language;
};

StatsReport compute_stats(std::span<const ChunkRecord> records);

/// Single JSON document, pretty-printed.
std::string stats_to_json(const StatsReport& report);

}  // namespace astchunk
