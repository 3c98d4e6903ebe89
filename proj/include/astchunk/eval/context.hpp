// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>

namespace astchunk::eval {

using TokenCounter = std::function<std::size_t(std::string_view)>;

/// ceil(bytes / 4), a rough stand-in for a model tokenizer.
std::size_t approximate_token_count(std::string_view text) noexcept;

struct PackedContext {
  std::string text;
  std::size_t chunks_used = 0;  // including a truncated final chunk
  bool truncated = false;
};

/// Appends chunk texts in rank order while the whole context stays within
/// `budget` tokens; the first chunk that would overflow is cut to the longest
/// prefix that fits and packing stops. `counter` must be monotone in length.
PackedContext pack_context(std::span<const std::string_view> ranked_texts, std::size_t budget,
                           const TokenCounter& counter = approximate_token_count);

}  // namespace astchunk::eval
