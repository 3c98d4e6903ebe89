// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#include "astchunk/records.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "astchunk/error.hpp"

namespace astchunk {

using ordered_json = nlohmann::ordered_json;

namespace {

const ordered_json& field(const ordered_json& obj, const char* key, std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw MalformedRecord(line, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t unsigned_field(const ordered_json& obj, const char* key, std::size_t line) {
  const auto& v = field(obj, key, line);
  if (!v.is_number_unsigned()) {
    throw MalformedRecord(line, std::string("field '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::string string_field(const ordered_json& obj, const char* key, std::size_t line) {
  const auto& v = field(obj, key, line);
  if (!v.is_string()) throw MalformedRecord(line, std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const ordered_json& obj, const char* key, std::size_t line) {
  const auto& v = field(obj, key, line);
  if (!v.is_array()) throw MalformedRecord(line, std::string("field '") + key + "' must be an array");
  std::vector<std::string> out;
  for (const auto& item : v) {
    if (!item.is_string()) {
      throw MalformedRecord(line, std::string("field '") + key + "' must hold strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

std::string record_to_json_line(const ChunkRecord& r) {
  ordered_json j;
  j["v"] = kRecordSchemaVersion;
  j["id"] = r.id;
  j["path"] = r.path;
  j["language"] = r.language;
  j["start_byte"] = r.start_byte;
  j["end_byte"] = r.end_byte;
  j["start_line"] = r.start_line;
  j["end_line"] = r.end_line;
  j["size_non_ws"] = r.size_non_ws;
  j["text"] = r.text;
  j["breadcrumb"] = {{"file", r.breadcrumb.file_path},
                     {"classes", r.breadcrumb.class_path},
                     {"functions", r.breadcrumb.function_path}};
  j["strategy"] = r.strategy;
  j["config_digest"] = r.config_digest;
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

ChunkRecord record_from_json_line(std::string_view line, std::size_t line_number) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedRecord(line_number, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw MalformedRecord(line_number, "record must be a JSON object");
  if (unsigned_field(j, "v", line_number) != kRecordSchemaVersion) {
    throw MalformedRecord(line_number, "unsupported schema version");
  }
  ChunkRecord r;
  r.id = string_field(j, "id", line_number);
  r.path = string_field(j, "path", line_number);
  r.language = string_field(j, "language", line_number);
  r.start_byte = unsigned_field(j, "start_byte", line_number);
  r.end_byte = unsigned_field(j, "end_byte", line_number);
  r.start_line = unsigned_field(j, "start_line", line_number);
  r.end_line = unsigned_field(j, "end_line", line_number);
  r.size_non_ws = unsigned_field(j, "size_non_ws", line_number);
  r.text = string_field(j, "text", line_number);
  const auto& crumb = field(j, "breadcrumb", line_number);
  if (!crumb.is_object()) throw MalformedRecord(line_number, "field 'breadcrumb' must be an object");
  r.breadcrumb.file_path = string_field(crumb, "file", line_number);
  r.breadcrumb.class_path = string_list(crumb, "classes", line_number);
  r.breadcrumb.function_path = string_list(crumb, "functions", line_number);
  r.strategy = string_field(j, "strategy", line_number);
  r.config_digest = string_field(j, "config_digest", line_number);
  if (r.end_byte < r.start_byte) throw MalformedRecord(line_number, "end_byte precedes start_byte");
  return r;
}

void write_records(std::ostream& out, std::span<const ChunkRecord> records) {
  for (const auto& r : records) out << record_to_json_line(r) << '\n';
}

void write_records(const std::filesystem::path& path, std::span<const ChunkRecord> records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  write_records(out, records);
  if (!out) throw IoError("write failed for " + path.string());
}

std::vector<ChunkRecord> read_records(std::istream& in) {
  std::vector<ChunkRecord> records;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    records.push_back(record_from_json_line(line, number));
  }
  return records;
}

std::vector<ChunkRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_records(in);
}

}  // namespace astchunk
