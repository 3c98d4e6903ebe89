// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#include "astchunk/size_metric.hpp"

#include <algorithm>

namespace astchunk {

std::size_t non_ws_size(std::string_view text) noexcept {
  return static_cast<std::size_t>(
      std::ranges::count_if(text, [](char c) { return !is_whitespace_byte(c); }));
}

std::size_t non_ws_size(const SourceDocument& doc, ByteSpan span) {
  return non_ws_size(doc.text(span));
}

NonWhitespaceIndex::NonWhitespaceIndex(std::string_view text) : prefix_(text.size() + 1, 0) {
  std::uint32_t running = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!is_whitespace_byte(text[i])) ++running;
    prefix_[i + 1] = running;
  }
}

}  // namespace astchunk
