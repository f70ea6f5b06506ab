// ufold/similarity.hpp - pairwise usage similarity
//
// A diff's counts collapse into one number: how much of the two context
// trees the matcher tied together, as a dice coefficient
//
//   2 * shared / (2 * shared + unmatched1 + unmatched2)
//
// which is 1 exactly when the mapping is total on both trees and 0 when
// nothing matched. The matrix builder diffs every unordered pair once, in
// index order, and mirrors the value to both triangles, so the result is
// symmetric with a unit diagonal by construction.
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ufold/tree_diff.hpp"
#include "ufold/usage_query.hpp"

namespace ufold {

/// Dice similarity of a diff; the empty-vs-empty 0/0 case scores 1.
double score(const DiffResult& d);

/// Dense symmetric score matrix with a fixed unit diagonal.
class SimilarityMatrix {
public:
  SimilarityMatrix() = default;
  explicit SimilarityMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  double at(std::size_t i, std::size_t j) const { return cells_[i * n_ + j]; }

  /// Stores v at (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, double v);

  const std::vector<double>& cells() const { return cells_; }

private:
  std::size_t n_ = 0;
  std::vector<double> cells_;
};

/// Scores all unordered context pairs. Pairs are independent, so the
/// parallel and serial builds produce bit-identical matrices; the serial
/// one exists as the reference the parallel kernel is checked against.
SimilarityMatrix build_context_matrix(std::span<const SyntaxTree* const> contexts,
                                      const MatcherConfig& cfg = {});
SimilarityMatrix build_context_matrix_serial(
    std::span<const SyntaxTree* const> contexts, const MatcherConfig& cfg = {});

/// Same, over usage sites in their canonical (file, offset) order.
SimilarityMatrix build_matrix(std::span<const UsageSite> usages,
                              const MatcherConfig& cfg = {});
SimilarityMatrix build_matrix_serial(std::span<const UsageSite> usages,
                                     const MatcherConfig& cfg = {});

}  // namespace ufold
