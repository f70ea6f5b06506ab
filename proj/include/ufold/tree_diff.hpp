// ufold/tree_diff.hpp - two-phase structural tree matching
//
// The matcher pairs up nodes of two trees in two passes. The anchor pass
// walks both trees tallest-subtree-first and maps isomorphic subtrees
// node-for-node; when one subtree has several isomorphic counterparts, the
// pair whose parents' surroundings already agree best wins (descendant
// dice, then smallest byte offset). The container pass then walks the
// still-unmapped interior nodes of the first tree in postorder and pairs
// each with a same-label node of the second tree whose descendants the
// mapping already ties together strongly enough (dice strictly above the
// threshold). Leaves outside anchored subtrees stay unmapped on purpose:
// a leaf carries no structure of its own to justify a pairing.
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ufold/syntax_tree.hpp"

namespace ufold {

struct MatcherConfig {
  /// Smallest subtree height the anchor pass will pair (a leaf is 1).
  std::uint32_t min_height = 2;
  /// Container acceptance: descendant dice must exceed this, strictly.
  double dice_threshold = 0.5;
};

/// Node pairs as (tree1 preorder index, tree2 preorder index), sorted by
/// the first component. Injective both ways; paired labels are equal.
using NodeMapping = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

struct DiffResult {
  NodeMapping mapping;
  std::uint32_t shared = 0;      // mapped pairs
  std::uint32_t unmatched1 = 0;  // tree1 nodes left unmapped
  std::uint32_t unmatched2 = 0;  // tree2 nodes left unmapped
};

NodeMapping match_top_down(const SyntaxTree& t1, const SyntaxTree& t2,
                           const MatcherConfig& cfg = {});

/// Extends an anchor mapping with container matches; returns the union.
NodeMapping match_bottom_up(const SyntaxTree& t1, const SyntaxTree& t2,
                            const NodeMapping& partial,
                            const MatcherConfig& cfg = {});

/// Runs both passes and tallies counts. Deterministic for fixed inputs;
/// identical trees always map completely.
DiffResult diff(const SyntaxTree& t1, const SyntaxTree& t2,
                const MatcherConfig& cfg = {});

}  // namespace ufold
