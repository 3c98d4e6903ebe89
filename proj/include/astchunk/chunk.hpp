// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "astchunk/language.hpp"
#include "astchunk/span.hpp"

namespace astchunk {

/// What to do with a childless node that alone exceeds the budget.
enum class OversizePolicy {
  line_split,      // pack whole lines, splitting an over-long line at the budget
  emit_oversized,  // pass the node through as a single over-budget chunk
};

std::string_view to_string(OversizePolicy policy);
std::optional<OversizePolicy> oversize_policy_from_string(std::string_view name);

/// Node kinds that open a class-like or function-like breadcrumb level.
///
/// An entry is either a bare kind ("method_declaration") or
/// "parent_kind>kind", which matches `kind` only when its parent has
/// `parent_kind`; the name is then read from the parent's `name` field.
struct KindSets {
  std::vector<std::string> class_like;
  std::vector<std::string> function_like;

  friend bool operator==(const KindSets&, const KindSets&) = default;
};

using KindMap = std::map<LanguageId, KindSets>;

KindMap default_kind_map();

struct ChunkingConfig {
  std::size_t max_chunk_size = 2000;  // non-whitespace bytes
  bool merge_enabled = true;          // false: split-only ablation
  OversizePolicy oversize_policy = OversizePolicy::line_split;
  KindMap kind_map = default_kind_map();

  /// Throws InvalidConfig.
  void validate() const;
};

struct Breadcrumb {
  std::string file_path;
  std::vector<std::string> class_path;     // outermost first
  std::vector<std::string> function_path;  // outermost first

  friend bool operator==(const Breadcrumb&, const Breadcrumb&) = default;
};

/// A contiguous byte span of one file emitted as a retrievable unit.
struct Chunk {
  std::string doc_path;
  ByteSpan span;
  std::vector<ByteSpan> node_spans;
  std::size_t size = 0;  // non-whitespace bytes in span
  LineSpan lines;
  Breadcrumb breadcrumb;
  std::size_t index = 0;

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

std::ostream& operator<<(std::ostream& os, const Chunk& chunk);

}  // namespace astchunk
