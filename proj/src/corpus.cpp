// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#include "astchunk/corpus.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <thread>

#include <json.hpp>

#include "astchunk/chunker.hpp"
#include "astchunk/error.hpp"
#include "astchunk/log.hpp"

namespace astchunk {

namespace fs = std::filesystem;

std::string_view to_string(Strategy strategy) {
  return strategy == Strategy::cast ? "cast" : "fixed-line";
}

std::optional<Strategy> strategy_from_string(std::string_view name) {
  if (name == "cast") return Strategy::cast;
  if (name == "fixed-line") return Strategy::fixed_line;
  return std::nullopt;
}

std::string to_valid_utf8(std::string_view bytes) {
  static constexpr std::string_view kReplacement = "\xEF\xBF\xBD";
  std::string out;
  out.reserve(bytes.size());
  std::size_t i = 0;
  while (i < bytes.size()) {
    const auto lead = static_cast<unsigned char>(bytes[i]);
    std::size_t len = 0;
    std::uint32_t min = 0;
    std::uint32_t cp = 0;
    if (lead < 0x80) {
      out.push_back(static_cast<char>(lead));
      ++i;
      continue;
    } else if ((lead & 0xE0) == 0xC0) {
      len = 2, min = 0x80, cp = lead & 0x1F;
    } else if ((lead & 0xF0) == 0xE0) {
      len = 3, min = 0x800, cp = lead & 0x0F;
    } else if ((lead & 0xF8) == 0xF0) {
      len = 4, min = 0x10000, cp = lead & 0x07;
    }
    bool ok = len != 0 && i + len <= bytes.size();
    for (std::size_t k = 1; ok && k < len; ++k) {
      const auto c = static_cast<unsigned char>(bytes[i + k]);
      ok = (c & 0xC0) == 0x80;
      cp = (cp << 6) | (c & 0x3F);
    }
    ok = ok && cp >= min && cp <= 0x10FFFF && !(cp >= 0xD800 && cp <= 0xDFFF);
    if (ok) {
      out.append(bytes.substr(i, len));
      i += len;
    } else {
      out.append(kReplacement);
      ++i;
    }
  }
  return out;
}

WalkResult walk_repository(const fs::path& root, const WalkOptions& options) {
  std::error_code ec;
  if (!fs::is_directory(root, ec)) throw IoError("not a directory: " + root.string());

  WalkResult result;
  std::vector<std::pair<std::string, fs::path>> files;
  fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
  if (ec) throw IoError("cannot walk " + root.string() + ": " + ec.message());
  for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
    if (ec) {
      result.errors.push_back({it->path().string(), ec.message()});
      ec.clear();
      continue;
    }
    const fs::directory_entry& entry = *it;
    if (entry.is_symlink(ec)) {
      if (entry.is_directory(ec)) it.disable_recursion_pending();
      continue;
    }
    if (!entry.is_regular_file(ec)) continue;
    files.emplace_back(fs::relative(entry.path(), root, ec).generic_string(), entry.path());
  }
  std::ranges::sort(files);

  const auto matches = [](const std::vector<std::string>& patterns, const std::string& rel) {
    return std::ranges::any_of(
        patterns, [&](const std::string& p) { return ::fnmatch(p.c_str(), rel.c_str(), 0) == 0; });
  };
  for (auto& [rel, abs] : files) {
    if ((!options.include.empty() && !matches(options.include, rel)) ||
        matches(options.exclude, rel)) {
      ++result.skipped_excluded;
      continue;
    }
    const auto language = detect_language(rel);
    if (!language) {
      ++result.skipped_unsupported;
      logger().debug("skipping {}: unsupported extension", rel);
      continue;
    }
    try {
      result.documents.push_back(SourceDocument::load(abs, rel, *language));
    } catch (const IoError& e) {
      logger().warn("{}", e.what());
      result.errors.push_back({rel, e.what()});
    }
  }
  return result;
}

std::string config_digest(const CorpusOptions& options) {
  nlohmann::json canonical;
  canonical["strategy"] = to_string(options.strategy);
  if (options.strategy == Strategy::fixed_line) {
    canonical["lines_per_chunk"] = options.lines_per_chunk;
  } else {
    const ChunkingConfig& c = options.config;
    canonical["max_chunk_size"] = c.max_chunk_size;
    canonical["merge_enabled"] = c.merge_enabled;
    canonical["oversize_policy"] = to_string(c.oversize_policy);
    nlohmann::json kinds = nlohmann::json::object();
    for (const auto& [lang, sets] : c.kind_map) {
      kinds[std::string(language_name(lang))] = {{"class_like", sets.class_like},
                                                 {"function_like", sets.function_like}};
    }
    canonical["kind_map"] = std::move(kinds);
  }
  // FNV-1a, 64 bit.
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char c : canonical.dump()) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
  return hex;
}

ChunkRecord make_record(const SourceDocument& doc, const Chunk& chunk, Strategy strategy,
                        const std::string& digest) {
  ChunkRecord r;
  r.id = doc.path() + ":" + std::to_string(chunk.index);
  r.path = doc.path();
  r.language = std::string(language_name(doc.language()));
  r.start_byte = chunk.span.start;
  r.end_byte = chunk.span.end;
  r.start_line = chunk.lines.first;
  r.end_line = chunk.lines.last;
  r.size_non_ws = chunk.size;
  r.text = to_valid_utf8(doc.text(chunk.span));
  r.breadcrumb = chunk.breadcrumb;
  r.strategy = std::string(to_string(strategy));
  r.config_digest = digest;
  return r;
}

namespace {

std::vector<ChunkRecord> records_for(Parser& parser, const SourceDocument& doc,
                                     const CorpusOptions& options, const std::string& digest) {
  const std::vector<Chunk> chunks = options.strategy == Strategy::cast
                                        ? chunk_document(parser, doc, options.config)
                                        : fixed_size_line_chunker(doc, options.lines_per_chunk);
  std::vector<ChunkRecord> records;
  records.reserve(chunks.size());
  for (const auto& chunk : chunks) records.push_back(make_record(doc, chunk, options.strategy, digest));
  return records;
}

}  // namespace

std::vector<ChunkRecord> chunk_file_records(const SourceDocument& doc, const CorpusOptions& options) {
  Parser parser;
  return records_for(parser, doc, options, config_digest(options));
}

CorpusResult chunk_corpus(std::span<const SourceDocument> docs, const CorpusOptions& options) {
  options.config.validate();
  if (options.strategy == Strategy::fixed_line && options.lines_per_chunk == 0) {
    throw InvalidConfig("lines_per_chunk must be at least 1");
  }
  const std::string digest = config_digest(options);
  std::vector<std::vector<ChunkRecord>> per_file(docs.size());
  std::vector<std::optional<FileFailure>> failures(docs.size());
  std::atomic<std::size_t> next{0};

  const auto worker = [&] {
    Parser parser;
    for (std::size_t i = next++; i < docs.size(); i = next++) {
      try {
        per_file[i] = records_for(parser, docs[i], options, digest);
      } catch (const std::exception& e) {
        logger().warn("skipping {}: {}", docs[i].path(), e.what());
        failures[i] = FileFailure{docs[i].path(), e.what()};
      }
    }
  };

  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(docs.size(), 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  CorpusResult result;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    for (auto& r : per_file[i]) result.records.push_back(std::move(r));
    if (failures[i]) result.failures.push_back(std::move(*failures[i]));
  }
  return result;
}

}  // namespace astchunk
