#include "ufold/cluster.hpp"

#include <cassert>
#include <limits>

namespace ufold {

double min_similarity(std::uint32_t x, const UsageCluster& c,
                      const SimilarityMatrix& m) {
  assert(!c.members.empty());
  double lowest = m.at(x, c.members.front());
  for (std::size_t k = 1; k < c.members.size(); ++k) {
    double v = m.at(x, c.members[k]);
    if (v < lowest) lowest = v;
  }
  return lowest;
}

void assign(std::uint32_t x, std::vector<UsageCluster>& clusters,
            const SimilarityMatrix& m, const ClusterConfig& cfg) {
  // Argmax over per-cluster minima. The empty start acts as -infinity and
  // the strict < keeps the earliest cluster on ties.
  std::size_t best = clusters.size();
  double best_min = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    double v = min_similarity(x, clusters[c], m);
    if (best_min < v) {
      best_min = v;
      best = c;
    }
  }
  if (best == clusters.size() || best_min < cfg.threshold) {
    clusters.push_back(UsageCluster{{x}});
  } else {
    clusters[best].members.push_back(x);
  }
}

std::vector<UsageCluster> cluster_all(const SimilarityMatrix& m,
                                      const ClusterConfig& cfg) {
  std::vector<UsageCluster> clusters;
  for (std::uint32_t x = 0; x < m.size(); ++x) {
    assign(x, clusters, m, cfg);
  }
  return clusters;
}

}  // namespace ufold
