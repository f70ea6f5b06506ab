// ufold/source_scan.hpp - corpus directory walking and glob filtering
#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ufold/diagnostics.hpp"

namespace ufold {

/// Glob match over a '/'-separated relative path.
///
/// '*' matches any run of non-separator characters, '?' exactly one,
/// and '**' matches across separators ("**/" also matches zero
/// directories). Matching is anchored at both ends.
bool glob_match(std::string_view pattern, std::string_view path);

/// glob_match, except a pattern without '/' applies to the basename only.
bool path_matches(std::string_view pattern, std::string_view rel_path);

struct ScanResult {
  /// '/'-separated paths relative to the scanned root, sorted bytewise.
  std::vector<std::string> files;
  std::vector<Warning> warnings;
};

/// Walks `root` recursively and returns every regular file that matches at
/// least one include pattern (no patterns: every file) and no exclude
/// pattern. Throws CorpusError when root is missing or not a directory;
/// entries that cannot be inspected are skipped with a warning.
ScanResult scan_corpus(const std::filesystem::path& root,
                       std::span<const std::string> include_globs,
                       std::span<const std::string> exclude_globs);

/// Whole file as a string, or nullopt with `error` filled on failure.
std::optional<std::string> read_text_file(const std::filesystem::path& file,
                                          std::string& error);

}  // namespace ufold
