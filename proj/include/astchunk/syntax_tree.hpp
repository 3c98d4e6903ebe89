// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "astchunk/source_document.hpp"
#include "astchunk/span.hpp"

struct TSParser;

namespace astchunk {

class SyntaxTree;

/// Read-only handle to one node of a SyntaxTree. Valid while the tree lives.
class SyntaxNodeView {
 public:
  SyntaxNodeView() = default;

  bool valid() const noexcept { return tree_ != nullptr; }

  /// Grammar node-type name ("function_definition", "ERROR", ...).
  std::string_view kind() const noexcept;
  /// Field this node occupies in its parent ("name", "body", ...), or "".
  std::string_view field_name() const noexcept;
  ByteSpan span() const noexcept;
  /// True for parser error and missing-token nodes.
  bool is_error() const noexcept;
  bool is_named() const noexcept;

  std::size_t child_count() const noexcept;
  SyntaxNodeView child(std::size_t i) const noexcept;
  std::vector<SyntaxNodeView> children() const;
  std::optional<SyntaxNodeView> child_by_field(std::string_view field) const noexcept;
  std::optional<SyntaxNodeView> parent() const noexcept;

  std::string_view text() const;
  const SourceDocument& document() const noexcept;
  std::uint32_t id() const noexcept { return index_; }

  friend bool operator==(const SyntaxNodeView& a, const SyntaxNodeView& b) noexcept {
    return a.tree_ == b.tree_ && a.index_ == b.index_;
  }

 private:
  friend class SyntaxTree;
  struct Storage;
  SyntaxNodeView(const Storage* tree, std::uint32_t index) : tree_(tree), index_(index) {}

  const Storage* tree_ = nullptr;
  std::uint32_t index_ = 0;
};

/// Immutable concrete syntax tree detached from the parser that built it.
/// Copies share storage, and node views stay valid while any copy lives.
///
/// Nodes are stored breadth-first so every node's children are contiguous.
/// Spans are normalised on construction: the root covers the whole document,
/// children are ordered, non-overlapping and contained in their parent.
class SyntaxTree {
 public:
  struct Node {
    std::string_view kind;
    std::string_view field;
    ByteSpan span;
    std::uint32_t parent = 0;
    std::uint32_t first_child = 0;
    std::uint32_t child_count = 0;
    bool is_error = false;
    bool is_named = false;
  };

  SyntaxTree(SourceDocument doc, std::vector<Node> nodes);

  SyntaxNodeView root() const noexcept;
  std::size_t node_count() const noexcept;
  const SourceDocument& document() const noexcept;

  bool has_error() const noexcept;

 private:
  std::shared_ptr<const SyntaxNodeView::Storage> storage_;
};

/// Owns one tree-sitter parser. Not thread-safe; give each worker its own.
class Parser {
 public:
  Parser();
  ~Parser();
  Parser(Parser&&) noexcept;
  Parser& operator=(Parser&&) noexcept;
  Parser(const Parser&) = delete;
  Parser& operator=(const Parser&) = delete;

  /// Never rejects input: malformed code yields error nodes.
  /// Throws UnregisteredLanguage.
  SyntaxTree parse(const SourceDocument& doc);

 private:
  struct Deleter {
    void operator()(TSParser* p) const noexcept;
  };
  std::unique_ptr<TSParser, Deleter> parser_;
};

/// Convenience wrapper constructing a throwaway parser.
SyntaxTree parse(const SourceDocument& doc);

}  // namespace astchunk
