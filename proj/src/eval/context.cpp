// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#include "astchunk/eval/context.hpp"

namespace astchunk::eval {

std::size_t approximate_token_count(std::string_view text) noexcept {
  return (text.size() + 3) / 4;
}

PackedContext pack_context(std::span<const std::string_view> ranked_texts, std::size_t budget,
                           const TokenCounter& counter) {
  PackedContext out;
  for (const std::string_view chunk : ranked_texts) {
    std::string candidate = out.text;
    candidate.append(chunk);
    if (counter(candidate) <= budget) {
      out.text = std::move(candidate);
      ++out.chunks_used;
      continue;
    }
    // Longest prefix of `chunk` that still fits.
    std::size_t lo = 0;
    std::size_t hi = chunk.size();
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo + 1) / 2;
      if (counter(out.text + std::string(chunk.substr(0, mid))) <= budget) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    while (lo > 0 && lo < chunk.size() &&
           (static_cast<unsigned char>(chunk[lo]) & 0xC0) == 0x80) {
      --lo;
    }
    if (lo > 0) {
      out.text.append(chunk.substr(0, lo));
      ++out.chunks_used;
    }
    out.truncated = true;
    break;
  }
  return out;
}

}  // namespace astchunk::eval
