#include "ufold/source_scan.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <system_error>

namespace ufold {

namespace fs = std::filesystem;

bool glob_match(std::string_view pattern, std::string_view path) {
  if (pattern.empty()) return path.empty();
  if (pattern[0] == '*') {
    bool deep = pattern.size() >= 2 && pattern[1] == '*';
    std::string_view rest = pattern.substr(deep ? 2 : 1);
    // "**/" also matches zero directories
    if (deep && !rest.empty() && rest[0] == '/' &&
        glob_match(rest.substr(1), path)) {
      return true;
    }
    for (std::size_t i = 0;; ++i) {
      if (glob_match(rest, path.substr(i))) return true;
      if (i == path.size()) return false;
      if (!deep && path[i] == '/') return false;
    }
  }
  if (path.empty()) return false;
  if (pattern[0] == '?') {
    return path[0] != '/' && glob_match(pattern.substr(1), path.substr(1));
  }
  return pattern[0] == path[0] &&
         glob_match(pattern.substr(1), path.substr(1));
}

bool path_matches(std::string_view pattern, std::string_view rel_path) {
  if (pattern.find('/') == std::string_view::npos) {
    std::size_t slash = rel_path.rfind('/');
    std::string_view base =
        slash == std::string_view::npos ? rel_path : rel_path.substr(slash + 1);
    return glob_match(pattern, base);
  }
  return glob_match(pattern, rel_path);
}

namespace {

bool any_match(std::span<const std::string> patterns, std::string_view rel) {
  return std::any_of(patterns.begin(), patterns.end(),
                     [rel](const std::string& p) { return path_matches(p, rel); });
}

}  // namespace

ScanResult scan_corpus(const fs::path& root,
                       std::span<const std::string> include_globs,
                       std::span<const std::string> exclude_globs) {
  std::error_code ec;
  if (!fs::is_directory(root, ec) || ec) {
    throw CorpusError("corpus root is not a readable directory: " +
                      root.string());
  }

  ScanResult out;
  fs::recursive_directory_iterator it(
      root, fs::directory_options::skip_permission_denied, ec);
  if (ec) {
    throw CorpusError("cannot walk corpus root " + root.string() + ": " +
                      ec.message());
  }
  for (fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
    if (ec) {
      out.warnings.push_back({root.string(), "walk stopped: " + ec.message()});
      break;
    }
    std::error_code stat_ec;
    bool regular = it->is_regular_file(stat_ec);
    if (stat_ec) {
      out.warnings.push_back(
          {it->path().string(), "skipped: " + stat_ec.message()});
      continue;
    }
    if (!regular) continue;
    std::string rel = it->path().lexically_relative(root).generic_string();
    if (!include_globs.empty() && !any_match(include_globs, rel)) continue;
    if (any_match(exclude_globs, rel)) continue;
    out.files.push_back(std::move(rel));
  }
  std::sort(out.files.begin(), out.files.end());
  return out;
}

std::optional<std::string> read_text_file(const fs::path& file,
                                          std::string& error) {
  std::ifstream in(file, std::ios::binary);
  if (!in) {
    error = "cannot open " + file.string();
    return std::nullopt;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    error = "read failed on " + file.string();
    return std::nullopt;
  }
  return std::move(buf).str();
}

}  // namespace ufold
