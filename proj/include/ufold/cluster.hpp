// ufold/cluster.hpp - greedy complete-linkage usage grouping
//
// Usages are taken one at a time in their canonical (file, offset) order.
// For each one, every existing cluster is scored by the minimum similarity
// between the newcomer and the cluster's members; the newcomer joins the
// cluster with the largest such minimum, or starts a new cluster when that
// best minimum falls below the threshold. Joining therefore requires the
// newcomer to clear the threshold against every member, so all
// intra-cluster pairs end up at or above it. The argmax keeps the
// earliest-created cluster on ties, which makes the whole pass
// deterministic.
#pragma once

#include <cstdint>
#include <vector>

#include "ufold/similarity.hpp"

namespace ufold {

struct ClusterConfig {
  /// Similarity cutoff in [0,1]; a newcomer joins only at or above it.
  double threshold = 0.88;
};

struct UsageCluster {
  /// Usage indices in insertion order; never empty.
  std::vector<std::uint32_t> members;

  /// The first usage that landed here stands for the whole cluster.
  std::uint32_t representative() const { return members.front(); }
};

/// Minimum of m[x][u] over the cluster's members. c must be non-empty.
double min_similarity(std::uint32_t x, const UsageCluster& c,
                      const SimilarityMatrix& m);

/// Places one not-yet-clustered usage, growing `clusters` in place.
void assign(std::uint32_t x, std::vector<UsageCluster>& clusters,
            const SimilarityMatrix& m, const ClusterConfig& cfg);

/// Clusters indices 0..n-1 in order; the caller's index order is the
/// processing order, so feeding canonically sorted usages makes the
/// result canonical too. Clusters come back in creation order.
std::vector<UsageCluster> cluster_all(const SimilarityMatrix& m,
                                      const ClusterConfig& cfg);

}  // namespace ufold
