// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#include "astchunk/chunk.hpp"

#include "astchunk/error.hpp"

namespace astchunk {

std::string_view to_string(OversizePolicy policy) {
  switch (policy) {
    case OversizePolicy::line_split:
      return "line-split";
    case OversizePolicy::emit_oversized:
      return "emit-oversized";
  }
  return "unknown";
}

std::optional<OversizePolicy> oversize_policy_from_string(std::string_view name) {
  if (name == "line-split") return OversizePolicy::line_split;
  if (name == "emit-oversized") return OversizePolicy::emit_oversized;
  return std::nullopt;
}

KindMap default_kind_map() {
  return {
      {LanguageId::Python, {{"class_definition"}, {"function_definition"}}},
      {LanguageId::Java,
       {{"class_declaration", "interface_declaration"},
        {"method_declaration", "constructor_declaration"}}},
      {LanguageId::CSharp,
       {{"class_declaration", "struct_declaration", "interface_declaration"},
        {"method_declaration", "constructor_declaration"}}},
      {LanguageId::TypeScript,
       {{"class_declaration"},
        {"function_declaration", "method_definition", "variable_declarator>arrow_function"}}},
  };
}

void ChunkingConfig::validate() const {
  if (max_chunk_size < 1) throw InvalidConfig("max_chunk_size must be at least 1");
}

std::ostream& operator<<(std::ostream& os, const Chunk& chunk) {
  os << chunk.doc_path << ':' << chunk.index << ' ' << chunk.span << ' ' << chunk.lines
     << " size=" << chunk.size << " nodes=" << chunk.node_spans.size();
  return os;
}

}  // namespace astchunk
