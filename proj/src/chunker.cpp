// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#include "astchunk/chunker.hpp"

#include <algorithm>

#include "astchunk/error.hpp"

namespace astchunk {
namespace {

constexpr bool is_utf8_continuation(char c) noexcept {
  return (static_cast<unsigned char>(c) & 0xC0) == 0x80;
}

// Recursive split-then-merge packing over sibling lists.
//
// `cursor_` is the end of the last byte already assigned to a group. Each
// node is measured over [cursor_, node.end) so the gap bytes in front of it
// are charged to the group that will receive them.
class Packer {
 public:
  Packer(std::string_view text, const NonWhitespaceIndex& index, const ChunkingConfig& config,
         std::size_t cursor)
      : text_(text), index_(index), config_(config), cursor_(cursor) {}

  void pack(std::span<const SyntaxNodeView> nodes) {
    NodeGroup current{.run = next_run_++};
    for (const auto& node : nodes) {
      const ByteSpan span = node.span();
      const std::size_t size = index_.count(cursor_, std::max(cursor_, span.end));
      if (current.size + size > config_.max_chunk_size) {
        flush(current);
        if (size > config_.max_chunk_size) {
          descend(node, size);
          current.run = next_run_++;
          continue;
        }
      }
      if (!config_.merge_enabled) flush(current);
      current.pieces.push_back({span, node});
      current.size += size;
      cursor_ = std::max(cursor_, span.end);
    }
    flush(current);
  }

  // Bytes after the last top-level node. Non-whitespace trailing bytes join
  // the final group when they fit, otherwise they form their own group(s).
  void absorb_trailing(std::size_t end, const SyntaxNodeView& owner) {
    if (cursor_ >= end) return;
    const std::size_t size = index_.count(cursor_, end);
    if (size == 0) return;
    if (config_.merge_enabled && !groups_.empty() && groups_.back().run == last_top_run_ &&
        groups_.back().size + size <= config_.max_chunk_size) {
      groups_.back().size += size;
      cursor_ = end;
      return;
    }
    emit_leaf({cursor_, end}, owner, size);
  }

  void mark_top_run() { last_top_run_ = next_run_ - 1; }

  std::vector<NodeGroup> take() { return std::move(groups_); }

 private:
  void flush(NodeGroup& group) {
    if (group.pieces.empty()) return;
    const std::size_t run = group.run;
    groups_.push_back(std::move(group));
    group = NodeGroup{.run = run};
  }

  void descend(const SyntaxNodeView& node, std::size_t size) {
    if (node.child_count() > 0) {
      const auto children = node.children();
      pack(children);
      return;
    }
    emit_leaf({cursor_, std::max(cursor_, node.span().end)}, node, size);
  }

  void emit_leaf(ByteSpan region, const SyntaxNodeView& node, std::size_t size) {
    if (config_.oversize_policy == OversizePolicy::emit_oversized ||
        size <= config_.max_chunk_size) {
      ByteSpan recorded = node.span();
      if (!region.contains(recorded)) recorded = region;
      groups_.push_back({.pieces = {{recorded, node}}, .size = size, .run = next_run_++});
    } else {
      const ByteSpan node_span = node.span();
      for (const ByteSpan& piece : split_oversized_leaf(text_, region, config_.max_chunk_size)) {
        ByteSpan recorded = piece;
        if (recorded.start < node_span.start && node_span.start < recorded.end) {
          recorded.start = node_span.start;
        }
        groups_.push_back(
            {.pieces = {{recorded, node}}, .size = index_.count(piece), .run = next_run_++});
      }
    }
    cursor_ = region.end;
  }

  std::string_view text_;
  const NonWhitespaceIndex& index_;
  const ChunkingConfig& config_;
  std::size_t cursor_;
  std::size_t next_run_ = 0;
  std::size_t last_top_run_ = static_cast<std::size_t>(-1);
  std::vector<NodeGroup> groups_;
};

SyntaxNodeView locate(const SyntaxNodeView& root, ByteSpan target) {
  SyntaxNodeView current = root;
  if (root.span() == target) return root;
  for (;;) {
    std::optional<SyntaxNodeView> next;
    for (std::size_t i = 0, n = current.child_count(); i < n; ++i) {
      const SyntaxNodeView c = current.child(i);
      const ByteSpan s = c.span();
      if (s.start > target.start) break;
      if (s.contains(target)) {
        next = c;
        break;
      }
    }
    if (!next) return current;
    if (next->span() == target) return *next;
    current = *next;
  }
}

struct KindRule {
  std::string_view parent;
  std::string_view kind;
};

KindRule parse_rule(std::string_view entry) {
  const auto sep = entry.find('>');
  if (sep == std::string_view::npos) return {{}, entry};
  return {entry.substr(0, sep), entry.substr(sep + 1)};
}

// Name of `node` if it matches one of `rules`.
std::optional<std::string> match_name(const SyntaxNodeView& node,
                                      const std::vector<std::string>& rules) {
  for (const auto& entry : rules) {
    const KindRule rule = parse_rule(entry);
    if (node.kind() != rule.kind) continue;
    SyntaxNodeView named = node;
    if (!rule.parent.empty()) {
      const auto parent = node.parent();
      if (!parent || parent->kind() != rule.parent) continue;
      named = *parent;
    }
    const auto name = named.child_by_field("name");
    return name ? std::string(name->text()) : std::string();
  }
  return std::nullopt;
}

}  // namespace

std::vector<NodeGroup> chunk_nodes(std::span<const SyntaxNodeView> nodes,
                                   const ChunkingConfig& config) {
  config.validate();
  if (nodes.empty()) return {};
  const SourceDocument& doc = nodes.front().document();
  const NonWhitespaceIndex index(doc.bytes());
  Packer packer(doc.bytes(), index, config, nodes.front().span().start);
  packer.pack(nodes);
  return packer.take();
}

std::vector<ByteSpan> split_oversized_leaf(std::string_view text, ByteSpan span,
                                           std::size_t budget) {
  budget = std::max<std::size_t>(budget, 1);
  std::vector<ByteSpan> pieces;
  std::size_t piece_start = span.start;
  std::size_t piece_size = 0;
  std::size_t pos = span.start;
  while (pos < span.end) {
    const std::size_t newline = text.find('\n', pos);
    const std::size_t line_end =
        newline == std::string_view::npos || newline >= span.end ? span.end : newline + 1;
    const std::size_t line_size = non_ws_size(text.substr(pos, line_end - pos));
    if (piece_size + line_size <= budget) {
      piece_size += line_size;
      pos = line_end;
      continue;
    }
    if (piece_size > 0) {
      pieces.push_back({piece_start, pos});
      piece_start = pos;
      piece_size = 0;
      continue;
    }
    // A single line larger than the budget: cut after its budget-th
    // non-whitespace byte, keeping any whitespace that follows.
    std::size_t cut = pos;
    for (std::size_t seen = 0; seen < budget; ++cut) {
      if (!is_whitespace_byte(text[cut])) ++seen;
    }
    while (cut < span.end && is_whitespace_byte(text[cut])) ++cut;
    if (cut < span.end && is_utf8_continuation(text[cut])) {
      std::size_t back = cut;
      while (back > pos && is_utf8_continuation(text[back])) --back;
      if (back > pos) cut = back;
    }
    pieces.push_back({piece_start, cut});
    piece_start = pos = cut;
  }
  if (piece_start < span.end || pieces.empty()) pieces.push_back({piece_start, span.end});
  return pieces;
}

LineSpan content_lines(const SourceDocument& doc, ByteSpan span) {
  const std::string_view text = doc.text(span);
  const auto first = std::ranges::find_if(text, [](char c) { return !is_whitespace_byte(c); });
  if (first == text.end()) {
    return {doc.line_of(span.start), doc.line_of(span.empty() ? span.start : span.end - 1)};
  }
  std::size_t last = text.size() - 1;
  while (is_whitespace_byte(text[last])) --last;
  return {doc.line_of(span.start + static_cast<std::size_t>(first - text.begin())),
          doc.line_of(span.start + last)};
}

std::vector<Chunk> attach_gaps(std::span<const NodeGroup> groups, const SourceDocument& doc) {
  std::vector<Chunk> chunks;
  std::vector<ByteSpan> carried;
  std::size_t prev_end = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const NodeGroup& group = groups[i];
    std::size_t end = group.pieces.empty() ? prev_end : group.pieces.back().span.end;
    if (i + 1 == groups.size()) end = doc.size();
    std::vector<ByteSpan> spans = std::move(carried);
    carried.clear();
    for (const auto& piece : group.pieces) spans.push_back(piece.span);
    if (end <= prev_end) {
      // Nothing new to cover (zero-width nodes); keep the spans with a neighbour.
      if (chunks.empty()) {
        carried = std::move(spans);
      } else {
        auto& into = chunks.back().node_spans;
        into.insert(into.end(), spans.begin(), spans.end());
      }
      continue;
    }
    Chunk chunk;
    chunk.doc_path = doc.path();
    chunk.span = {prev_end, end};
    chunk.node_spans = std::move(spans);
    chunk.size = non_ws_size(doc, chunk.span);
    chunk.lines = content_lines(doc, chunk.span);
    chunk.breadcrumb.file_path = doc.path();
    chunk.index = chunks.size();
    chunks.push_back(std::move(chunk));
    prev_end = end;
  }
  return chunks;
}

Breadcrumb extract_breadcrumb(const Chunk& chunk, const SyntaxNodeView& root,
                              const ChunkingConfig& config) {
  Breadcrumb crumb{.file_path = chunk.doc_path};
  if (chunk.node_spans.empty()) return crumb;
  const auto kinds = config.kind_map.find(root.document().language());
  if (kinds == config.kind_map.end()) return crumb;

  std::vector<SyntaxNodeView> chain;
  for (std::optional<SyntaxNodeView> n = locate(root, chunk.node_spans.front()); n; n = n->parent()) {
    chain.push_back(*n);
  }
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    if (auto name = match_name(*it, kinds->second.class_like)) {
      crumb.class_path.push_back(std::move(*name));
    } else if (auto fn = match_name(*it, kinds->second.function_like)) {
      crumb.function_path.push_back(std::move(*fn));
    }
  }
  return crumb;
}

std::vector<Chunk> chunk_tree(const SyntaxTree& tree, const ChunkingConfig& config) {
  config.validate();
  const SourceDocument& doc = tree.document();
  if (doc.size() == 0) return {};
  const NonWhitespaceIndex index(doc.bytes());
  const SyntaxNodeView root = tree.root();

  std::vector<Chunk> chunks;
  const std::size_t total = index.count(0, doc.size());
  if (total <= config.max_chunk_size) {
    Chunk whole;
    whole.doc_path = doc.path();
    whole.span = {0, doc.size()};
    whole.node_spans = {root.span()};
    whole.size = total;
    whole.lines = content_lines(doc, whole.span);
    chunks.push_back(std::move(whole));
  } else {
    Packer packer(doc.bytes(), index, config, 0);
    packer.pack(root.children());
    packer.mark_top_run();
    packer.absorb_trailing(doc.size(), root);
    const auto groups = packer.take();
    chunks = attach_gaps(groups, doc);
  }
  for (auto& chunk : chunks) chunk.breadcrumb = extract_breadcrumb(chunk, root, config);
  return chunks;
}

std::vector<Chunk> chunk_document(Parser& parser, const SourceDocument& doc,
                                  const ChunkingConfig& config) {
  config.validate();
  if (doc.size() == 0) return {};
  return chunk_tree(parser.parse(doc), config);
}

std::vector<Chunk> chunk_document(const SourceDocument& doc, const ChunkingConfig& config) {
  Parser parser;
  return chunk_document(parser, doc, config);
}

std::vector<Chunk> fixed_size_line_chunker(const SourceDocument& doc, std::size_t lines_per_chunk) {
  if (lines_per_chunk == 0) throw InvalidConfig("lines_per_chunk must be at least 1");
  std::vector<Chunk> chunks;
  const std::size_t lines = doc.line_count();
  for (std::size_t first = 1; first <= lines; first += lines_per_chunk) {
    const std::size_t last = std::min(first + lines_per_chunk - 1, lines);
    Chunk chunk;
    chunk.doc_path = doc.path();
    chunk.span = doc.line_range(first, last);
    chunk.size = non_ws_size(doc, chunk.span);
    chunk.lines = {first, last};
    chunk.breadcrumb.file_path = doc.path();
    chunk.index = chunks.size();
    chunks.push_back(std::move(chunk));
  }
  return chunks;
}

}  // namespace astchunk
