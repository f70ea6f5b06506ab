// ufold/report.hpp - rendering clustered usages for humans and machines
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ufold/cluster.hpp"
#include "ufold/diagnostics.hpp"
#include "ufold/tree_diff.hpp"
#include "ufold/usage_query.hpp"

namespace ufold {

/// Where one usage lives, plus the verbatim source line it sits on.
struct UsageRef {
  std::string file;
  std::uint32_t line = 1;
  std::string snippet;
};

/// Members keep cluster insertion order; the first one is the
/// representative shown expanded in reports.
struct ReportCluster {
  std::vector<UsageRef> members;
};

/// Everything one run produced, in display order.
///
/// Clusters are sorted largest first; equal sizes keep creation order,
/// which follows the representative's (file, offset) position. Cluster
/// sizes always sum to usage_count.
struct Report {
  std::string symbol;
  std::string kind = "any";
  std::optional<std::uint32_t> arity;
  std::uint32_t files_scanned = 0;
  std::vector<Warning> warnings;
  std::uint32_t usage_count = 0;
  std::vector<ReportCluster> clusters;
  double threshold = 0.0;
  MatcherConfig matcher;
};

Report build_report(const SymbolQuery& query,
                    const std::vector<UsageSite>& sites,
                    const std::vector<UsageCluster>& clusters,
                    std::uint32_t files_scanned, std::vector<Warning> warnings,
                    const MatcherConfig& matcher, const ClusterConfig& cfg);

/// Plain text: header, then "Cluster k (n members)" blocks with the
/// representative's line expanded and members as a file + line list.
std::string render_text(const Report& report);

/// One JSON document with stable key order; ends with a newline.
/// Identical runs byte-identical output.
std::string render_json(const Report& report);

}  // namespace ufold
