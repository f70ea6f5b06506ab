#include "ufold/cluster.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "support/cluster_oracle.hpp"

using namespace ufold;

namespace {

SimilarityMatrix matrix_from(const std::vector<std::vector<double>>& rows) {
  SimilarityMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      m.set(i, j, rows[i][j]);
    }
  }
  return m;
}

SimilarityMatrix uniform_offdiag(std::size_t n, double v) {
  SimilarityMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, v);
  }
  return m;
}

void check_partition(const std::vector<UsageCluster>& clusters, std::size_t n) {
  std::vector<int> seen(n, 0);
  for (const UsageCluster& c : clusters) {
    REQUIRE_FALSE(c.members.empty());
    for (std::uint32_t u : c.members) {
      REQUIRE(u < n);
      ++seen[u];
    }
  }
  for (std::size_t i = 0; i < n; ++i) CHECK(seen[i] == 1);
}

}  // namespace

TEST_SUITE("cluster") {

TEST_CASE("min similarity over one, two, and three members") {
  SimilarityMatrix m(4);
  m.set(3, 0, 0.9);
  m.set(3, 1, 0.7);
  m.set(3, 2, 0.95);

  CHECK(min_similarity(3, UsageCluster{{0}}, m) == 0.9);
  CHECK(min_similarity(3, UsageCluster{{0, 1}}, m) == 0.7);

  m.set(3, 1, 0.88);
  m.set(3, 3, 1.0);  // self-similarity partakes when x is a member
  CHECK(min_similarity(3, UsageCluster{{3, 1, 2}}, m) == 0.88);
}

TEST_CASE("first usage always opens a cluster") {
  SimilarityMatrix m(1);
  std::vector<UsageCluster> clusters;
  assign(0, clusters, m, {});
  REQUIRE(clusters.size() == 1);
  CHECK(clusters[0].members == std::vector<std::uint32_t>{0});
  CHECK(clusters[0].representative() == 0);
}

TEST_CASE("newcomer joins the cluster with the best minimum") {
  // Clusters so far: {0}, {1,2}, {3}. For x=4 the per-cluster minima are
  // 0.90, min(0.85,0.92)=0.85, 0.50; the argmax is the first cluster and
  // 0.90 clears the 0.88 bar.
  SimilarityMatrix m(5);
  m.set(4, 0, 0.90);
  m.set(4, 1, 0.85);
  m.set(4, 2, 0.92);
  m.set(4, 3, 0.50);
  std::vector<UsageCluster> clusters = {UsageCluster{{0}}, UsageCluster{{1, 2}},
                                        UsageCluster{{3}}};
  assign(4, clusters, m, {});
  REQUIRE(clusters.size() == 3);
  CHECK(clusters[0].members == std::vector<std::uint32_t>{0, 4});
}

TEST_CASE("a best minimum below the threshold opens a new cluster") {
  SimilarityMatrix m(2);
  m.set(1, 0, 0.50);
  std::vector<UsageCluster> clusters = {UsageCluster{{0}}};
  assign(1, clusters, m, {});
  REQUIRE(clusters.size() == 2);
  CHECK(clusters[1].members == std::vector<std::uint32_t>{1});
}

TEST_CASE("exactly at the threshold still joins") {
  SimilarityMatrix m(2);
  m.set(1, 0, 0.88);
  std::vector<UsageCluster> clusters = {UsageCluster{{0}}};
  assign(1, clusters, m, {});
  REQUIRE(clusters.size() == 1);
  CHECK(clusters[0].members == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("equal minima keep the earliest cluster") {
  SimilarityMatrix m(3);
  m.set(2, 0, 0.95);
  m.set(2, 1, 0.95);
  std::vector<UsageCluster> clusters = {UsageCluster{{0}}, UsageCluster{{1}}};
  assign(2, clusters, m, {});
  CHECK(clusters[0].members == std::vector<std::uint32_t>{0, 2});
  CHECK(clusters[1].members == std::vector<std::uint32_t>{1});
}

TEST_CASE("all-alike and all-different corners") {
  std::vector<UsageCluster> one = cluster_all(uniform_offdiag(5, 1.0), {});
  REQUIRE(one.size() == 1);
  CHECK(one[0].members.size() == 5);

  std::vector<UsageCluster> five = cluster_all(uniform_offdiag(5, 0.0), {});
  CHECK(five.size() == 5);
}

TEST_CASE("threshold extremes") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> unit(0.0, 0.999);
  for (int round = 0; round < 20; ++round) {
    std::size_t n = 1 + rng() % 10;
    SimilarityMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, unit(rng));
    }

    ClusterConfig everything{0.0};
    CHECK(cluster_all(m, everything).size() == 1);

    // All off-diagonal scores sit below 1, so nothing can join at T=1.
    ClusterConfig nothing{1.0};
    CHECK(cluster_all(m, nothing).size() == n);
  }
}

TEST_CASE("every admitted pair meets the threshold") {
  std::mt19937_64 rng(2718);
  std::uniform_real_distribution<double> tight(0.80, 1.0);
  for (int round = 0; round < 50; ++round) {
    std::size_t n = 2 + rng() % 11;
    SimilarityMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) m.set(i, j, tight(rng));
    }
    ClusterConfig cfg;
    std::vector<UsageCluster> clusters = cluster_all(m, cfg);
    check_partition(clusters, n);
    for (const UsageCluster& c : clusters) {
      for (std::size_t a = 0; a < c.members.size(); ++a) {
        for (std::size_t b = a + 1; b < c.members.size(); ++b) {
          CHECK(m.at(c.members[a], c.members[b]) >= cfg.threshold);
        }
      }
    }
  }
}

TEST_CASE("matches the independent restatement on random matrices") {
  std::mt19937_64 rng(9001);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> near(0.82, 0.94);
  for (int round = 0; round < 200; ++round) {
    std::size_t n = 1 + rng() % 12;
    std::vector<std::vector<double>> rows(n, std::vector<double>(n, 1.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        double v;
        switch (rng() % 3) {
          case 0: v = unit(rng); break;
          case 1: v = near(rng); break;  // crowd the threshold
          default: v = std::round(unit(rng) * 20.0) / 20.0; break;  // ties
        }
        rows[i][j] = rows[j][i] = v;
      }
    }

    double threshold = round % 4 == 0 ? unit(rng) : 0.88;
    std::vector<UsageCluster> got =
        cluster_all(matrix_from(rows), ClusterConfig{threshold});
    std::vector<std::vector<std::uint32_t>> want =
        testing::oracle_cluster(rows, threshold);

    REQUIRE(got.size() == want.size());
    for (std::size_t c = 0; c < got.size(); ++c) {
      CHECK(got[c].members == want[c]);
    }
    check_partition(got, n);
  }
}

TEST_CASE("identical input clusters identically") {
  SimilarityMatrix m = uniform_offdiag(6, 0.9);
  m.set(0, 5, 0.2);
  m.set(2, 3, 0.88);
  std::vector<UsageCluster> a = cluster_all(m, {});
  std::vector<UsageCluster> b = cluster_all(m, {});
  REQUIRE(a.size() == b.size());
  for (std::size_t c = 0; c < a.size(); ++c) {
    CHECK(a[c].members == b[c].members);
  }
}

}  // TEST_SUITE
