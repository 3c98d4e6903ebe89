// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#include "astchunk/eval/report.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "astchunk/error.hpp"
#include "astchunk/eval/context.hpp"
#include "astchunk/eval/lexical.hpp"

namespace astchunk::eval {

using nlohmann::ordered_json;

namespace {

Query query_from_json(const std::string& line, std::size_t number) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedRecord(number, std::string("invalid JSON: ") + e.what());
  }
  const auto str = [&](const ordered_json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_string()) {
      throw MalformedRecord(number, std::string("field '") + key + "' must be a string");
    }
    return it->get<std::string>();
  };
  const auto line_no = [&](const ordered_json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_number_unsigned() || it->get<std::size_t>() == 0) {
      throw MalformedRecord(number, std::string("field '") + key + "' must be a positive integer");
    }
    return it->get<std::size_t>();
  };
  if (!j.is_object()) throw MalformedRecord(number, "query must be a JSON object");
  Query q{.id = str(j, "id"), .text = str(j, "text"), .gold = {}};
  const auto gold = j.find("gold");
  if (gold == j.end() || !gold->is_array() || gold->empty()) {
    throw MalformedRecord(number, "field 'gold' must be a non-empty array");
  }
  for (const auto& g : *gold) {
    if (!g.is_object()) throw MalformedRecord(number, "gold entries must be objects");
    GoldSpan span{.path = str(g, "path"), .lines = {line_no(g, "start_line"), line_no(g, "end_line")}};
    if (span.lines.last < span.lines.first) {
      throw MalformedRecord(number, "gold end_line precedes start_line");
    }
    q.gold.push_back(std::move(span));
  }
  return q;
}

ordered_json to_json(const std::map<std::size_t, MetricsAtK>& at_k) {
  ordered_json out = ordered_json::object();
  for (const auto& [k, m] : at_k) {
    out[std::to_string(k)] = {{"ndcg", m.ndcg}, {"precision", m.precision}, {"recall", m.recall}};
  }
  return out;
}

}  // namespace

std::vector<Query> read_queries(std::istream& in) {
  std::vector<Query> queries;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    queries.push_back(query_from_json(line, number));
  }
  return queries;
}

std::vector<Query> read_queries(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_queries(in);
}

EvalReport evaluate(std::span<const ChunkRecord> ast_records,
                    std::span<const ChunkRecord> baseline_records, std::span<const Query> queries,
                    const EvalOptions& options) {
  EvalReport report;
  report.ks = options.ks;
  std::ranges::sort(report.ks);
  report.ks.erase(std::unique(report.ks.begin(), report.ks.end()), report.ks.end());
  if (report.ks.empty() || report.ks.front() == 0) throw std::invalid_argument("k must be at least 1");
  report.query_count = queries.size();
  report.context_budget = options.context_budget;

  const LexicalIndex ast_index(ast_records);
  const LexicalIndex baseline_index(baseline_records);
  using TextById = std::unordered_map<std::string_view, std::string_view>;
  TextById ast_text;
  TextById baseline_text;
  for (const auto& r : ast_records) ast_text.emplace(r.id, r.text);
  for (const auto& r : baseline_records) baseline_text.emplace(r.id, r.text);

  struct Sums {
    std::map<std::size_t, MetricsAtK> at_k;
    std::size_t evaluated = 0;
    std::size_t zero_relevant = 0;
    double context_chunks = 0.0;
  };
  std::map<std::string, Sums> sums;

  for (const Query& q : queries) {
    ScoredList ast_ranked = ast_index.search(q.text, 0);
    ast_ranked.query_id = q.id;
    ScoredList baseline_ranked = baseline_index.search(q.text, 0);
    baseline_ranked.query_id = q.id;
    ScoredList mapped =
        map_scores_onto_baseline(ast_ranked, ast_records, baseline_records, options.aggregation);
    std::erase_if(mapped.items, [](const ScoredItem& item) { return item.score <= 0.0; });

    const Judgments ast_relevant = judge_all(ast_records, q.gold);
    const Judgments baseline_relevant = judge_all(baseline_records, q.gold);

    struct Column {
      const char* name;
      const ScoredList* ranked;
      const Judgments* relevant;
      const TextById* texts;
    };
    const Column columns[] = {
        {kAstColumn, &ast_ranked, &ast_relevant, &ast_text},
        {kBaselineColumn, &baseline_ranked, &baseline_relevant, &baseline_text},
        {kMappedColumn, &mapped, &baseline_relevant, &baseline_text},
    };

    QueryReport qr{.id = q.id, .columns = {}};
    for (const auto& [name, ranked, relevant, text_of] : columns) {
      Sums& s = sums[name];

      std::vector<std::string_view> texts;
      for (const auto& item : ranked->items) {
        if (const auto it = text_of->find(item.chunk_id); it != text_of->end()) texts.push_back(it->second);
      }
      s.context_chunks += static_cast<double>(pack_context(texts, options.context_budget).chunks_used);

      if (relevant->empty()) {
        ++s.zero_relevant;
        qr.columns[name] = std::nullopt;
        continue;
      }
      ++s.evaluated;
      std::map<std::size_t, MetricsAtK> at_k;
      for (const std::size_t k : report.ks) {
        const MetricsAtK m{ndcg_at_k(*ranked, *relevant, k), precision_at_k(*ranked, *relevant, k),
                           recall_at_k(*ranked, *relevant, k)};
        at_k[k] = m;
        auto& acc = s.at_k[k];
        acc.ndcg += m.ndcg;
        acc.precision += m.precision;
        acc.recall += m.recall;
      }
      qr.columns[name] = std::move(at_k);
    }
    report.queries.push_back(std::move(qr));
  }

  for (const char* name : {kAstColumn, kBaselineColumn, kMappedColumn}) {
    Sums& s = sums[name];
    ColumnReport& col = report.columns[name];
    col.evaluated_queries = s.evaluated;
    col.zero_relevant_queries = s.zero_relevant;
    col.mean_context_chunks =
        queries.empty() ? 0.0 : s.context_chunks / static_cast<double>(queries.size());
    for (const std::size_t k : report.ks) {
      MetricsAtK m = s.at_k[k];
      if (s.evaluated > 0) {
        const double n = static_cast<double>(s.evaluated);
        m.ndcg /= n;
        m.precision /= n;
        m.recall /= n;
      }
      col.at_k[k] = m;
    }
  }
  return report;
}

std::string report_to_json(const EvalReport& report) {
  ordered_json j;
  j["query_count"] = report.query_count;
  j["ks"] = report.ks;
  j["context_budget"] = report.context_budget;
  ordered_json columns = ordered_json::object();
  for (const char* name : {kAstColumn, kBaselineColumn, kMappedColumn}) {
    const auto it = report.columns.find(name);
    if (it == report.columns.end()) continue;
    const ColumnReport& c = it->second;
    columns[name] = {{"evaluated_queries", c.evaluated_queries},
                     {"zero_relevant_queries", c.zero_relevant_queries},
                     {"mean_context_chunks", c.mean_context_chunks},
                     {"metrics", to_json(c.at_k)}};
  }
  j["columns"] = std::move(columns);
  ordered_json queries = ordered_json::array();
  for (const auto& q : report.queries) {
    ordered_json entry;
    entry["id"] = q.id;
    for (const char* name : {kAstColumn, kBaselineColumn, kMappedColumn}) {
      const auto it = q.columns.find(name);
      entry[name] = (it == q.columns.end() || !it->second) ? ordered_json(nullptr) : to_json(*it->second);
    }
    queries.push_back(std::move(entry));
  }
  j["queries"] = std::move(queries);
  return j.dump(2);
}

}  // namespace astchunk::eval
