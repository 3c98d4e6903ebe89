// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#include "astchunk/syntax_tree.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include <tree_sitter/api.h>

#include "astchunk/error.hpp"

namespace astchunk {

struct SyntaxNodeView::Storage {
  SourceDocument doc;
  std::vector<SyntaxTree::Node> nodes;
};

// --- SyntaxNodeView ---------------------------------------------------------

std::string_view SyntaxNodeView::kind() const noexcept { return tree_->nodes[index_].kind; }
std::string_view SyntaxNodeView::field_name() const noexcept { return tree_->nodes[index_].field; }
ByteSpan SyntaxNodeView::span() const noexcept { return tree_->nodes[index_].span; }
bool SyntaxNodeView::is_error() const noexcept { return tree_->nodes[index_].is_error; }
bool SyntaxNodeView::is_named() const noexcept { return tree_->nodes[index_].is_named; }

std::size_t SyntaxNodeView::child_count() const noexcept {
  return tree_->nodes[index_].child_count;
}

SyntaxNodeView SyntaxNodeView::child(std::size_t i) const noexcept {
  return {tree_, static_cast<std::uint32_t>(tree_->nodes[index_].first_child + i)};
}

std::vector<SyntaxNodeView> SyntaxNodeView::children() const {
  const auto& n = tree_->nodes[index_];
  std::vector<SyntaxNodeView> out;
  out.reserve(n.child_count);
  for (std::uint32_t i = 0; i < n.child_count; ++i) out.push_back({tree_, n.first_child + i});
  return out;
}

std::optional<SyntaxNodeView> SyntaxNodeView::child_by_field(std::string_view field) const noexcept {
  const auto& n = tree_->nodes[index_];
  for (std::uint32_t i = 0; i < n.child_count; ++i) {
    if (tree_->nodes[n.first_child + i].field == field) {
      return SyntaxNodeView{tree_, n.first_child + i};
    }
  }
  return std::nullopt;
}

std::optional<SyntaxNodeView> SyntaxNodeView::parent() const noexcept {
  if (index_ == 0) return std::nullopt;
  return SyntaxNodeView{tree_, tree_->nodes[index_].parent};
}

std::string_view SyntaxNodeView::text() const { return tree_->doc.text(span()); }

const SourceDocument& SyntaxNodeView::document() const noexcept { return tree_->doc; }

// --- SyntaxTree -------------------------------------------------------------

SyntaxTree::SyntaxTree(SourceDocument doc, std::vector<Node> nodes) {
  if (nodes.empty()) {
    nodes.push_back(Node{.kind = "", .field = "", .span = {0, doc.size()}});
  }
  storage_ = std::make_shared<const SyntaxNodeView::Storage>(
      SyntaxNodeView::Storage{std::move(doc), std::move(nodes)});
}

SyntaxNodeView SyntaxTree::root() const noexcept { return {storage_.get(), 0}; }
std::size_t SyntaxTree::node_count() const noexcept { return storage_->nodes.size(); }
const SourceDocument& SyntaxTree::document() const noexcept { return storage_->doc; }

bool SyntaxTree::has_error() const noexcept {
  return std::ranges::any_of(storage_->nodes, [](const Node& n) { return n.is_error; });
}

// --- Parser -----------------------------------------------------------------

void Parser::Deleter::operator()(TSParser* p) const noexcept { ts_parser_delete(p); }

Parser::Parser() : parser_(ts_parser_new()) {}
Parser::~Parser() = default;
Parser::Parser(Parser&&) noexcept = default;
Parser& Parser::operator=(Parser&&) noexcept = default;

namespace {

bool ends_with_ci(std::string_view s, std::string_view suffix) {
  if (suffix.empty() || s.size() < suffix.size()) return false;
  return std::equal(suffix.rbegin(), suffix.rend(), s.rbegin(), [](char a, char b) {
    return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b));
  });
}

struct TreeDeleter {
  void operator()(TSTree* t) const noexcept { ts_tree_delete(t); }
};

// Copies the tree breadth-first so each node's children are contiguous, and
// clamps spans so children are ordered, disjoint and inside their parent.
std::vector<SyntaxTree::Node> flatten(TSNode root, std::size_t doc_size) {
  std::vector<SyntaxTree::Node> nodes;
  std::vector<TSNode> handles;
  nodes.push_back({.kind = ts_node_type(root),
                   .field = "",
                   .span = {0, doc_size},
                   .is_error = ts_node_is_error(root) || ts_node_is_missing(root),
                   .is_named = ts_node_is_named(root)});
  handles.push_back(root);

  TSTreeCursor cursor = ts_tree_cursor_new(root);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    ts_tree_cursor_reset(&cursor, handles[i]);
    if (!ts_tree_cursor_goto_first_child(&cursor)) continue;
    const ByteSpan parent_span = nodes[i].span;
    nodes[i].first_child = static_cast<std::uint32_t>(nodes.size());
    std::size_t prev_end = parent_span.start;
    std::uint32_t count = 0;
    do {
      TSNode child = ts_tree_cursor_current_node(&cursor);
      const char* field = ts_tree_cursor_current_field_name(&cursor);
      std::size_t start = std::clamp<std::size_t>(ts_node_start_byte(child), prev_end, parent_span.end);
      std::size_t end = std::clamp<std::size_t>(ts_node_end_byte(child), start, parent_span.end);
      nodes.push_back({.kind = ts_node_type(child),
                       .field = field ? field : "",
                       .span = {start, end},
                       .parent = static_cast<std::uint32_t>(i),
                       .is_error = ts_node_is_error(child) || ts_node_is_missing(child),
                       .is_named = ts_node_is_named(child)});
      handles.push_back(child);
      prev_end = end;
      ++count;
    } while (ts_tree_cursor_goto_next_sibling(&cursor));
    nodes[i].child_count = count;
  }
  ts_tree_cursor_delete(&cursor);
  return nodes;
}

}  // namespace

SyntaxTree Parser::parse(const SourceDocument& doc) {
  const LanguageInfo* info = find_language(doc.language());
  if (info == nullptr) {
    throw UnregisteredLanguage("no grammar registered for language id " +
                               std::to_string(static_cast<int>(doc.language())));
  }
  const TSLanguage* grammar = info->grammar();
  if (info->dialect_grammar && ends_with_ci(doc.path(), info->dialect_extension)) {
    grammar = info->dialect_grammar();
  }
  if (!ts_parser_set_language(parser_.get(), grammar)) {
    throw UnregisteredLanguage("incompatible grammar for " + std::string(info->name));
  }
  const std::string_view bytes = doc.bytes();
  std::unique_ptr<TSTree, TreeDeleter> tree(ts_parser_parse_string(
      parser_.get(), nullptr, bytes.data(), static_cast<std::uint32_t>(bytes.size())));
  if (!tree) throw Error("parser produced no tree for " + doc.path());
  return SyntaxTree(doc, flatten(ts_tree_root_node(tree.get()), bytes.size()));
}

SyntaxTree parse(const SourceDocument& doc) {
  Parser parser;
  return parser.parse(doc);
}

}  // namespace astchunk
