// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#include "astchunk/eval/lexical.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <unordered_set>

namespace astchunk::eval {
namespace {

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }

}  // namespace

std::vector<std::string> tokenize_identifiers(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  const auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (!is_alnum(c)) {
      flush();
      continue;
    }
    if (!current.empty() && is_upper(c)) {
      const char prev = text[i - 1];
      const bool next_lower = i + 1 < text.size() && is_lower(text[i + 1]);
      // fooBar -> foo|Bar, HTTPServer -> HTTP|Server
      if (is_lower(prev) || std::isdigit(static_cast<unsigned char>(prev)) ||
          (is_upper(prev) && next_lower)) {
        flush();
      }
    }
    current.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  flush();
  return tokens;
}

LexicalIndex::LexicalIndex(std::span<const ChunkRecord> records, Bm25Params params)
    : params_(params) {
  std::size_t total = 0;
  for (std::size_t doc = 0; doc < records.size(); ++doc) {
    ids_.push_back(records[doc].id);
    const auto tokens = tokenize_identifiers(records[doc].text);
    lengths_.push_back(tokens.size());
    total += tokens.size();
    std::unordered_map<std::string, std::size_t> tf;
    for (const auto& t : tokens) ++tf[t];
    for (auto& [term, count] : tf) postings_[term].emplace_back(doc, count);
  }
  avg_len_ = records.empty() ? 0.0 : static_cast<double>(total) / static_cast<double>(records.size());
}

double LexicalIndex::idf(std::string_view term) const {
  const auto it = postings_.find(std::string(term));
  const double df = it == postings_.end() ? 0.0 : static_cast<double>(it->second.size());
  const double n = static_cast<double>(ids_.size());
  return std::log(1.0 + (n - df + 0.5) / (df + 0.5));
}

ScoredList LexicalIndex::search(std::string_view query, std::size_t k) const {
  std::vector<double> scores(ids_.size(), 0.0);
  std::unordered_set<std::string> seen;
  for (auto& term : tokenize_identifiers(query)) {
    if (!seen.insert(term).second) continue;
    const auto it = postings_.find(term);
    if (it == postings_.end()) continue;
    const double w = idf(term);
    for (const auto& [doc, count] : it->second) {
      const double tf = static_cast<double>(count);
      const double norm = 1.0 - params_.b + params_.b * static_cast<double>(lengths_[doc]) / avg_len_;
      scores[doc] += w * tf * (params_.k1 + 1.0) / (tf + params_.k1 * norm);
    }
  }
  ScoredList out;
  for (std::size_t doc = 0; doc < scores.size(); ++doc) {
    if (scores[doc] > 0.0) out.items.push_back({ids_[doc], scores[doc]});
  }
  out.sort();
  if (k != 0 && out.items.size() > k) out.items.resize(k);
  return out;
}

ScoredList lexical_retrieve(std::string_view query, std::span<const ChunkRecord> records,
                            std::size_t k) {
  return LexicalIndex(records).search(query, k);
}

}  // namespace astchunk::eval
