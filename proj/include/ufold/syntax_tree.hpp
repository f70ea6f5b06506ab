// ufold/syntax_tree.hpp - ordered labeled syntax trees and per-node metrics
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ufold {

/// Half-open byte range [begin, end) into a source buffer.
struct Span {
  std::uint32_t begin = 0;
  std::uint32_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
  bool contains(const Span& inner) const {
    return begin <= inner.begin && inner.end <= end;
  }
};

/// One node of an ordered labeled tree.
///
/// `label` is the grammar node-kind name. `value` holds token text and is
/// only meaningful on leaves; SyntaxTree clears it on interior nodes.
/// Children are kept in source order and each child's span lies within its
/// parent's span.
struct SyntaxNode {
  std::string label;
  std::string value;
  std::vector<SyntaxNode> children;
  Span span;

  bool is_leaf() const { return children.empty(); }
};

/// Subtree measurements used by the matcher.
///
/// `height` counts nodes on the longest root-to-leaf path (a leaf has
/// height 1). `struct_hash` is order-sensitive over (label, value, child
/// hashes); isomorphic subtrees hash equal, but hash equality must be
/// confirmed structurally before it is trusted.
struct NodeMetrics {
  std::uint32_t size = 0;
  std::uint32_t height = 0;
  std::uint64_t struct_hash = 0;
};

NodeMetrics compute_metrics(const SyntaxNode& node);

/// Metrics for every node of the subtree, indexed by preorder position.
std::vector<NodeMetrics> compute_metrics_preorder(const SyntaxNode& root);

/// Structural equality: labels, leaf values and child order all match.
bool isomorphic(const SyntaxNode& a, const SyntaxNode& b);

/// Preorder listing of a subtree (node first, then children left to right).
std::vector<const SyntaxNode*> preorder(const SyntaxNode& root);

/// An immutable tree plus the identity of the source it came from.
///
/// Construction normalizes interior-node values to empty and counts nodes;
/// after that the tree never changes, so it is safe to share across
/// concurrent workers. `source` optionally keeps the originating text alive
/// so lines and snippets can be recovered later.
class SyntaxTree {
public:
  SyntaxTree();
  SyntaxTree(SyntaxNode root, std::string source_id,
             std::shared_ptr<const std::string> source = nullptr);

  const SyntaxNode& root() const { return root_; }
  const std::string& source_id() const { return source_id_; }
  std::uint32_t node_count() const { return node_count_; }
  const std::shared_ptr<const std::string>& source() const { return source_; }

private:
  SyntaxNode root_;
  std::string source_id_;
  std::shared_ptr<const std::string> source_;
  std::uint32_t node_count_ = 0;
};

}  // namespace ufold
