// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "astchunk/chunk.hpp"
#include "astchunk/source_document.hpp"

namespace astchunk {

enum class Strategy { cast, fixed_line };

std::string_view to_string(Strategy strategy);
std::optional<Strategy> strategy_from_string(std::string_view name);

/// Serializable form of a chunk.
struct ChunkRecord {
  std::string id;  // "<path>:<index>"
  std::string path;
  std::string language;
  std::size_t start_byte = 0;
  std::size_t end_byte = 0;
  std::size_t start_line = 0;
  std::size_t end_line = 0;
  std::size_t size_non_ws = 0;
  std::string text;
  Breadcrumb breadcrumb;
  std::string strategy;
  std::string config_digest;

  friend bool operator==(const ChunkRecord&, const ChunkRecord&) = default;
};

struct FileFailure {
  std::string path;
  std::string message;
};

struct WalkOptions {
  std::vector<std::string> include;  // fnmatch patterns on the relative path
  std::vector<std::string> exclude;
};

struct WalkResult {
  std::vector<SourceDocument> documents;  // sorted by relative path
  std::size_t skipped_unsupported = 0;
  std::size_t skipped_excluded = 0;
  std::vector<FileFailure> errors;
};

/// Collects supported source files under `root`. Symlinks are not followed.
/// Throws IoError when `root` is not a directory.
WalkResult walk_repository(const std::filesystem::path& root, const WalkOptions& options = {});

struct CorpusOptions {
  Strategy strategy = Strategy::cast;
  ChunkingConfig config;
  std::size_t lines_per_chunk = 30;
  std::size_t jobs = 1;
};

struct CorpusResult {
  std::vector<ChunkRecord> records;  // (path, index) order
  std::vector<FileFailure> failures;
};

/// Chunks every document with a bounded worker pool; output order does not
/// depend on `options.jobs`.
CorpusResult chunk_corpus(std::span<const SourceDocument> docs, const CorpusOptions& options);

/// Chunks one document into records.
std::vector<ChunkRecord> chunk_file_records(const SourceDocument& doc, const CorpusOptions& options);

ChunkRecord make_record(const SourceDocument& doc, const Chunk& chunk, Strategy strategy,
                        const std::string& config_digest);

/// Stable 16-hex-digit digest of everything that influences chunk output.
std::string config_digest(const CorpusOptions& options);

/// Replaces invalid UTF-8 sequences with U+FFFD.
std::string to_valid_utf8(std::string_view bytes);

}  // namespace astchunk
