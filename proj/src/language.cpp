// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#include "astchunk/language.hpp"

#include <algorithm>
#include <array>
#include <cctype>

extern "C" {
const TSLanguage* tree_sitter_python();
const TSLanguage* tree_sitter_java();
const TSLanguage* tree_sitter_c_sharp();
const TSLanguage* tree_sitter_typescript();
const TSLanguage* tree_sitter_tsx();
}

namespace astchunk {
namespace {

const std::array<LanguageInfo, 4>& registry() {
  static const std::array<LanguageInfo, 4> languages{{
      {LanguageId::Python, "python", {".py"}, tree_sitter_python, {}, nullptr},
      {LanguageId::Java, "java", {".java"}, tree_sitter_java, {}, nullptr},
      {LanguageId::CSharp, "csharp", {".cs"}, tree_sitter_c_sharp, {}, nullptr},
      {LanguageId::TypeScript, "typescript", {".ts", ".tsx"}, tree_sitter_typescript, ".tsx",
       tree_sitter_tsx},
  }};
  return languages;
}

std::string lowercase(std::string s) {
  std::ranges::transform(s, s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

std::span<const LanguageInfo> registered_languages() { return registry(); }

const LanguageInfo* find_language(LanguageId id) noexcept {
  for (const auto& info : registry()) {
    if (info.id == id) return &info;
  }
  return nullptr;
}

std::optional<LanguageId> detect_language(const std::filesystem::path& path) {
  const std::string ext = lowercase(path.extension().string());
  if (ext.empty()) return std::nullopt;
  for (const auto& info : registry()) {
    if (std::ranges::find(info.extensions, ext) != info.extensions.end()) return info.id;
  }
  return std::nullopt;
}

std::optional<LanguageId> language_from_name(std::string_view name) {
  const std::string lowered = lowercase(std::string(name));
  for (const auto& info : registry()) {
    if (info.name == lowered) return info.id;
  }
  return std::nullopt;
}

std::string_view language_name(LanguageId id) {
  const auto* info = find_language(id);
  return info ? info->name : std::string_view("unknown");
}

}  // namespace astchunk
