// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#include "astchunk/source_document.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "astchunk/error.hpp"

namespace astchunk {

SourceDocument::SourceDocument(std::string path, std::string bytes, LanguageId language) {
  auto data = std::make_shared<Data>();
  data->path = std::move(path);
  data->bytes = std::move(bytes);
  data->language = language;
  data->line_offsets.push_back(0);
  const std::string& b = data->bytes;
  for (std::size_t i = 0; i + 1 < b.size(); ++i) {
    if (b[i] == '\n') data->line_offsets.push_back(i + 1);
  }
  data_ = std::move(data);
}

SourceDocument SourceDocument::load(const std::filesystem::path& file, std::string path,
                                    LanguageId language) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw IoError("cannot open " + file.string());
  std::string bytes{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  if (in.bad()) throw IoError("read failed for " + file.string());
  return SourceDocument(std::move(path), std::move(bytes), language);
}

std::size_t SourceDocument::line_count() const noexcept {
  return data_->bytes.empty() ? 0 : data_->line_offsets.size();
}

std::size_t SourceDocument::line_of(std::size_t offset) const noexcept {
  const auto& offsets = data_->line_offsets;
  auto it = std::upper_bound(offsets.begin(), offsets.end(), offset);
  return static_cast<std::size_t>(it - offsets.begin());
}

ByteSpan SourceDocument::line_range(std::size_t first, std::size_t last) const {
  const auto& offsets = data_->line_offsets;
  if (first < 1 || last < first || last > line_count()) {
    std::ostringstream msg;
    msg << "line range " << first << "-" << last << " outside " << path();
    throw SpanOutOfBounds(msg.str());
  }
  const std::size_t end = last < offsets.size() ? offsets[last] : size();
  return {offsets[first - 1], end};
}

void SourceDocument::check_span(ByteSpan span) const {
  if (span.start > span.end || span.end > size()) {
    std::ostringstream msg;
    msg << "span " << span << " outside " << path() << " (" << size() << " bytes)";
    throw SpanOutOfBounds(msg.str());
  }
}

std::string_view SourceDocument::text(ByteSpan span) const {
  check_span(span);
  return bytes().substr(span.start, span.length());
}

}  // namespace astchunk
