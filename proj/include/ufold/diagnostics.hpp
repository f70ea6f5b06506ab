// ufold/diagnostics.hpp - error types and source-position helpers
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ufold {

/// 1-based line/column position inside a source buffer.
struct SourcePos {
  std::uint32_t line = 1;
  std::uint32_t column = 1;
};

SourcePos position_at(std::string_view text, std::uint32_t byte_offset);
std::uint32_t line_at(std::string_view text, std::uint32_t byte_offset);

/// The full source line containing `byte_offset`, without the newline.
std::string_view line_slice(std::string_view text, std::uint32_t byte_offset);

/// Syntax error in a single input, pointing at the first offending position.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string source_id, SourcePos pos, const std::string& message);

  const std::string& source_id() const { return source_id_; }
  SourcePos pos() const { return pos_; }

private:
  std::string source_id_;
  SourcePos pos_;
};

/// Fatal problem with a corpus root (missing, unreadable, not a directory).
class CorpusError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Non-fatal per-file issue recorded while processing a corpus.
struct Warning {
  std::string file;
  std::string message;
};

}  // namespace ufold
