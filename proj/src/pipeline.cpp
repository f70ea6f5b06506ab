#include "ufold/pipeline.hpp"

#include <cstdint>
#include <utility>

#include "ufold/diagnostics.hpp"
#include "ufold/frontend.hpp"
#include "ufold/source_scan.hpp"

namespace ufold {

namespace {

struct ParsedCorpus {
  std::vector<SyntaxTree> trees;
  std::vector<Warning> warnings;
};

// Files parse independently; slot-per-file keeps the merge deterministic
// no matter how the iterations are scheduled.
ParsedCorpus parse_all(const std::filesystem::path& root,
                       const std::vector<std::string>& files, bool parallel) {
  const std::int64_t n = static_cast<std::int64_t>(files.size());
  std::vector<SyntaxTree> slots(files.size());
  std::vector<std::string> errors(files.size());
  std::vector<char> parsed(files.size(), 0);

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (std::int64_t i = 0; i < n; ++i) {
    const std::string& rel = files[static_cast<std::size_t>(i)];
    const LanguageFrontend* frontend = frontend_for_path(rel);
    if (frontend == nullptr) {
      errors[i] = "no parser handles this file; skipped";
      continue;
    }
    std::string error;
    auto text = read_text_file(root / rel, error);
    if (!text) {
      errors[i] = error + "; skipped";
      continue;
    }
    try {
      slots[i] = frontend->parse(std::move(*text), rel);
      parsed[i] = 1;
    } catch (const ParseError& e) {
      errors[i] = std::string(e.what()) + "; skipped";
    }
  }
  (void)parallel;

  ParsedCorpus out;
  for (std::size_t i = 0; i < files.size(); ++i) {
    if (parsed[i]) {
      out.trees.push_back(std::move(slots[i]));
    } else {
      out.warnings.push_back({files[i], errors[i]});
    }
  }
  return out;
}

}  // namespace

FindResult run_find(const FindOptions& options) {
  std::vector<std::string> includes = options.include_globs;
  if (includes.empty()) includes = java_frontend().default_globs();
  ScanResult scanned =
      scan_corpus(options.root, includes, options.exclude_globs);

  ParsedCorpus corpus =
      parse_all(options.root, scanned.files, options.parallel);
  std::vector<Warning> warnings = std::move(scanned.warnings);
  warnings.insert(warnings.end(), corpus.warnings.begin(),
                  corpus.warnings.end());

  FindResult result;
  result.sites = find_usages(corpus.trees, options.query);
  result.matrix = options.parallel
                      ? build_matrix(result.sites, options.matcher)
                      : build_matrix_serial(result.sites, options.matcher);
  result.clusters = cluster_all(result.matrix, options.cluster);
  result.report = build_report(
      options.query, result.sites, result.clusters,
      static_cast<std::uint32_t>(scanned.files.size()), std::move(warnings),
      options.matcher, options.cluster);
  return result;
}

}  // namespace ufold
