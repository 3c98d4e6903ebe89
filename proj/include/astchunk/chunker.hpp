// Copyright 2026 The astchunk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "astchunk/chunk.hpp"
#include "astchunk/size_metric.hpp"
#include "astchunk/source_document.hpp"
#include "astchunk/syntax_tree.hpp"

namespace astchunk {

/// One member of a node group: a node, or a line-split slice of a leaf.
struct NodePiece {
  ByteSpan span;
  SyntaxNodeView node;
};

/// Nodes packed together into one chunk.
struct NodeGroup {
  std::vector<NodePiece> pieces;
  /// Non-whitespace bytes the group will hold once gaps are attached.
  std::size_t size = 0;
  /// Groups sharing a run id were packed consecutively from one sibling list
  /// with no recursion between them.
  std::size_t run = 0;

  ByteSpan hull() const noexcept {
    return pieces.empty() ? ByteSpan{} : ByteSpan{pieces.front().span.start, pieces.back().span.end};
  }
};

/// Parses and chunks one document with the split-then-merge algorithm.
///
/// A file whose whole non-whitespace size fits the budget comes back as a
/// single chunk. Otherwise the root's children are packed greedily; any node
/// too large on its own is recursed into. Chunks tile the file exactly.
std::vector<Chunk> chunk_document(const SourceDocument& doc, const ChunkingConfig& config);

/// Same as above with a caller-owned parser.
std::vector<Chunk> chunk_document(Parser& parser, const SourceDocument& doc,
                                  const ChunkingConfig& config);

/// Chunks an already-parsed tree.
std::vector<Chunk> chunk_tree(const SyntaxTree& tree, const ChunkingConfig& config);

/// Greedy packing of sibling nodes into budget-respecting groups.
///
/// A node joins the open group while the running size stays within
/// max_chunk_size. An over-budget node flushes the group and is recursed
/// into; groups produced by the recursion are never merged with later
/// siblings. Childless over-budget nodes follow config.oversize_policy.
/// Sizes include whitespace-separated gap bytes preceding each node, so the
/// group size equals the size of the chunk attach_gaps will build from it.
std::vector<NodeGroup> chunk_nodes(std::span<const SyntaxNodeView> nodes,
                                   const ChunkingConfig& config);

/// Splits `span` of a childless node into pieces of at most `budget`
/// non-whitespace bytes. Whole lines are packed greedily; a line larger than
/// the budget by itself is cut after its budget-th non-whitespace byte (plus
/// any following whitespace). Cuts never land inside a UTF-8 sequence unless
/// the budget is smaller than the sequence.
std::vector<ByteSpan> split_oversized_leaf(std::string_view text, ByteSpan span,
                                           std::size_t budget);

/// Materialises groups as chunks that tile the document. Each gap between
/// groups goes to the chunk that follows it; bytes after the last group go
/// to the final chunk. Breadcrumbs carry the file path only.
std::vector<Chunk> attach_gaps(std::span<const NodeGroup> groups, const SourceDocument& doc);

/// Names of class-like and function-like nodes enclosing (or equal to) the
/// chunk's first node, outermost first.
Breadcrumb extract_breadcrumb(const Chunk& chunk, const SyntaxNodeView& root,
                              const ChunkingConfig& config);

/// Baseline: consecutive groups of `lines_per_chunk` lines.
/// Throws InvalidConfig when lines_per_chunk is 0.
std::vector<Chunk> fixed_size_line_chunker(const SourceDocument& doc, std::size_t lines_per_chunk);

/// Line range of a chunk: from the first to the last line holding a
/// non-whitespace byte of `span`, so leading gap newlines do not pull in the
/// previous chunk's last line. All-whitespace spans use their raw extent.
LineSpan content_lines(const SourceDocument& doc, ByteSpan span);

}  // namespace astchunk
