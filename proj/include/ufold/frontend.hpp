// ufold/frontend.hpp - language adapters that turn source text into trees
#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ufold/syntax_tree.hpp"

namespace ufold {

/// Parses one language into the shared SyntaxTree shape.
///
/// A frontend owns the mapping from file names to itself (handles) and the
/// include patterns used when a caller does not narrow the corpus walk.
class LanguageFrontend {
 public:
  virtual ~LanguageFrontend() = default;

  virtual std::string_view name() const = 0;
  virtual bool handles(const std::filesystem::path& file) const = 0;
  virtual std::vector<std::string> default_globs() const = 0;

  /// Throws ParseError (with source_id and position) on malformed input.
  /// The returned tree keeps the text alive via its source() handle.
  virtual SyntaxTree parse(std::string text,
                           const std::string& source_id) const = 0;
};

const LanguageFrontend& java_frontend();

/// Frontend claiming the file, or nullptr when none does.
const LanguageFrontend* frontend_for_path(const std::filesystem::path& file);

}  // namespace ufold
