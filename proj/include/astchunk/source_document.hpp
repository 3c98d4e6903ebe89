// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "astchunk/language.hpp"
#include "astchunk/span.hpp"

namespace astchunk {

/// Immutable file contents plus a line index. Copies share the same bytes.
class SourceDocument {
 public:
  SourceDocument(std::string path, std::string bytes, LanguageId language);

  /// Reads `file` from disk. `path` is the repository-relative name recorded
  /// on chunks. Throws IoError.
  static SourceDocument load(const std::filesystem::path& file, std::string path,
                             LanguageId language);

  const std::string& path() const noexcept { return data_->path; }
  std::string_view bytes() const noexcept { return data_->bytes; }
  std::size_t size() const noexcept { return data_->bytes.size(); }
  LanguageId language() const noexcept { return data_->language; }

  /// Byte offset of each line start; the first entry is always 0.
  std::span<const std::size_t> line_offsets() const noexcept { return data_->line_offsets; }

  /// Number of lines; a trailing newline does not open a new line.
  std::size_t line_count() const noexcept;

  /// 1-based line containing `offset`. Offsets at or past the end map to the
  /// last line.
  std::size_t line_of(std::size_t offset) const noexcept;

  /// Byte range covering 1-based lines [first, last].
  ByteSpan line_range(std::size_t first, std::size_t last) const;

  /// Throws SpanOutOfBounds.
  std::string_view text(ByteSpan span) const;

  void check_span(ByteSpan span) const;

 private:
  struct Data {
    std::string path;
    std::string bytes;
    LanguageId language;
    std::vector<std::size_t> line_offsets;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace astchunk
