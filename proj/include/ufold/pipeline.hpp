// ufold/pipeline.hpp - one-shot query orchestration
//
// Runs the whole chain for one symbol: walk the corpus, parse what a
// frontend claims, collect usage sites, score all context pairs, cluster,
// and package a report. Every stage is deterministic for a fixed corpus,
// whether or not the parallel kernels are enabled.
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "ufold/cluster.hpp"
#include "ufold/report.hpp"
#include "ufold/similarity.hpp"
#include "ufold/tree_diff.hpp"
#include "ufold/usage_query.hpp"

namespace ufold {

struct FindOptions {
  SymbolQuery query;
  std::filesystem::path root;
  /// Empty: each frontend's default patterns.
  std::vector<std::string> include_globs;
  std::vector<std::string> exclude_globs;
  MatcherConfig matcher;
  ClusterConfig cluster;
  /// Off: parse and diff on one thread (the reference kernels).
  bool parallel = true;
};

struct FindResult {
  /// Canonical (file, offset) order; indices below refer into this.
  std::vector<UsageSite> sites;
  /// Creation order, as clustered.
  std::vector<UsageCluster> clusters;
  SimilarityMatrix matrix;
  Report report;
};

/// Throws CorpusError when the root cannot be walked. Unparseable or
/// unclaimed files become report warnings, never failures.
FindResult run_find(const FindOptions& options);

}  // namespace ufold
