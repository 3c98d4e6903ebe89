// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "astchunk/source_document.hpp"
#include "astchunk/span.hpp"

namespace astchunk {

/// Space, tab, CR, LF, form feed and vertical tab. Everything else counts,
/// including each byte of a multi-byte UTF-8 sequence.
constexpr bool is_whitespace_byte(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

std::size_t non_ws_size(std::string_view text) noexcept;

/// Non-whitespace byte count of `span`. Throws SpanOutOfBounds.
std::size_t non_ws_size(const SourceDocument& doc, ByteSpan span);

/// Prefix sums of non-whitespace bytes for O(1) span queries.
class NonWhitespaceIndex {
 public:
  explicit NonWhitespaceIndex(std::string_view text);

  std::size_t count(ByteSpan span) const noexcept {
    return prefix_[span.end] - prefix_[span.start];
  }
  std::size_t count(std::size_t start, std::size_t end) const noexcept {
    return prefix_[end] - prefix_[start];
  }
  std::size_t size() const noexcept { return prefix_.size() - 1; }

 private:
  std::vector<std::uint32_t> prefix_;
};

}  // namespace astchunk
