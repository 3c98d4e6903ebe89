// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

struct TSLanguage;

namespace astchunk {

enum class LanguageId : std::uint8_t {
  Python,
  Java,
  CSharp,
  TypeScript,
};

/// Registry entry tying a language to its grammar and file extensions.
struct LanguageInfo {
  LanguageId id;
  std::string_view name;
  std::vector<std::string_view> extensions;  // lowercase, with leading dot
  const TSLanguage* (*grammar)();
  /// Alternate grammar selected by extension (".tsx" uses the TSX dialect).
  std::string_view dialect_extension;
  const TSLanguage* (*dialect_grammar)();
};

/// All registered languages, in LanguageId order.
std::span<const LanguageInfo> registered_languages();

/// Registry lookup; nullptr when `id` has no registered grammar.
const LanguageInfo* find_language(LanguageId id) noexcept;

/// Case-insensitive extension match on the final path component.
std::optional<LanguageId> detect_language(const std::filesystem::path& path);

std::optional<LanguageId> language_from_name(std::string_view name);

/// Registry name: "python", "java", "csharp" or "typescript".
std::string_view language_name(LanguageId id);

}  // namespace astchunk
