#include "ufold/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace ufold {

namespace {

UsageRef make_ref(const UsageSite& site) {
  UsageRef ref;
  ref.file = site.file;
  ref.line = site.line;
  if (site.context.source()) {
    ref.snippet = std::string(
        line_slice(*site.context.source(), site.usage_span.begin));
  }
  return ref;
}

}  // namespace

Report build_report(const SymbolQuery& query,
                    const std::vector<UsageSite>& sites,
                    const std::vector<UsageCluster>& clusters,
                    std::uint32_t files_scanned, std::vector<Warning> warnings,
                    const MatcherConfig& matcher, const ClusterConfig& cfg) {
  Report report;
  report.symbol = query.name;
  if (query.kind_filter) report.kind = to_string(*query.kind_filter);
  report.arity = query.arity_filter;
  report.files_scanned = files_scanned;
  report.warnings = std::move(warnings);
  report.usage_count = static_cast<std::uint32_t>(sites.size());
  report.threshold = cfg.threshold;
  report.matcher = matcher;

  for (const UsageCluster& cluster : clusters) {
    ReportCluster rc;
    rc.members.reserve(cluster.members.size());
    for (std::uint32_t index : cluster.members) {
      rc.members.push_back(make_ref(sites[index]));
    }
    report.clusters.push_back(std::move(rc));
  }
  // ties keep creation order, i.e. the earliest representative
  std::stable_sort(report.clusters.begin(), report.clusters.end(),
                   [](const ReportCluster& a, const ReportCluster& b) {
                     return a.members.size() > b.members.size();
                   });
  return report;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "usage clusters for '" << report.symbol << "' (kind: " << report.kind;
  if (report.arity) out << ", arity: " << *report.arity;
  out << ")\n";
  out << "corpus: " << report.files_scanned << " files scanned, "
      << report.warnings.size() << " warnings\n";
  out << report.usage_count << " usages in " << report.clusters.size()
      << " clusters (threshold " << report.threshold << ")\n";

  for (std::size_t c = 0; c < report.clusters.size(); ++c) {
    const ReportCluster& cluster = report.clusters[c];
    out << "\nCluster " << (c + 1) << " (" << cluster.members.size()
        << " members)\n";
    const UsageRef& rep = cluster.members.front();
    out << "  representative: " << rep.file << " line " << rep.line << "\n";
    out << "    " << rep.snippet << "\n";
    out << "  members:\n";
    for (const UsageRef& member : cluster.members) {
      out << "    " << member.file << " line " << member.line << "\n";
    }
  }
  return std::move(out).str();
}

std::string render_json(const Report& report) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["query"]["symbol"] = report.symbol;
  doc["query"]["kind"] = report.kind;
  if (report.arity) {
    doc["query"]["arity"] = *report.arity;
  } else {
    doc["query"]["arity"] = nullptr;
  }
  doc["corpus"]["files_scanned"] = report.files_scanned;
  doc["corpus"]["warnings"] = json::array();
  for (const Warning& w : report.warnings) {
    doc["corpus"]["warnings"].push_back({{"file", w.file}, {"message", w.message}});
  }
  doc["config"]["threshold"] = report.threshold;
  doc["config"]["min_height"] = report.matcher.min_height;
  doc["config"]["dice_threshold"] = report.matcher.dice_threshold;
  doc["usage_count"] = report.usage_count;
  doc["cluster_count"] = report.clusters.size();
  doc["clusters"] = json::array();
  for (std::size_t c = 0; c < report.clusters.size(); ++c) {
    const ReportCluster& cluster = report.clusters[c];
    json jc;
    jc["name"] = "Cluster " + std::to_string(c + 1);
    jc["size"] = cluster.members.size();
    auto member_json = [](const UsageRef& ref) {
      return json{{"file", ref.file}, {"line", ref.line}, {"snippet", ref.snippet}};
    };
    jc["representative"] = member_json(cluster.members.front());
    jc["members"] = json::array();
    for (const UsageRef& member : cluster.members) {
      jc["members"].push_back(member_json(member));
    }
    doc["clusters"].push_back(std::move(jc));
  }
  return doc.dump(2) + "\n";
}

}  // namespace ufold
