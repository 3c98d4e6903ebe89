// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <ostream>

namespace astchunk {

/// Half-open byte range [start, end).
struct ByteSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  constexpr std::size_t length() const noexcept { return end - start; }
  constexpr bool empty() const noexcept { return start == end; }
  constexpr bool contains(const ByteSpan& other) const noexcept {
    return start <= other.start && other.end <= end;
  }

  friend constexpr bool operator==(const ByteSpan&, const ByteSpan&) = default;
};

/// Inclusive 1-based line range.
struct LineSpan {
  std::size_t first = 0;
  std::size_t last = 0;

  constexpr std::size_t count() const noexcept { return last >= first ? last - first + 1 : 0; }
  constexpr bool overlaps(const LineSpan& other) const noexcept {
    return first <= other.last && other.first <= last;
  }

  friend constexpr bool operator==(const LineSpan&, const LineSpan&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const ByteSpan& s) {
  return os << '[' << s.start << ", " << s.end << ')';
}

inline std::ostream& operator<<(std::ostream& os, const LineSpan& s) {
  return os << "L" << s.first << "-L" << s.last;
}

}  // namespace astchunk
