// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "astchunk/corpus.hpp"

namespace astchunk {

inline constexpr int kRecordSchemaVersion = 1;

/// One JSON object, no trailing newline. Keys: v, id, path, language,
/// start_byte, end_byte, start_line, end_line, size_non_ws, text,
/// breadcrumb {file, classes, functions}, strategy, config_digest.
std::string record_to_json_line(const ChunkRecord& record);

/// Throws MalformedRecord tagged with `line_number`.
ChunkRecord record_from_json_line(std::string_view line, std::size_t line_number);

void write_records(std::ostream& out, std::span<const ChunkRecord> records);
void write_records(const std::filesystem::path& path, std::span<const ChunkRecord> records);

/// Blank lines are ignored. Throws MalformedRecord or IoError.
std::vector<ChunkRecord> read_records(std::istream& in);
std::vector<ChunkRecord> read_records(const std::filesystem::path& path);

}  // namespace astchunk
