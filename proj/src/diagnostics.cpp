#include "ufold/diagnostics.hpp"

#include <algorithm>

namespace ufold {

SourcePos position_at(std::string_view text, std::uint32_t byte_offset) {
  const std::size_t end = std::min<std::size_t>(byte_offset, text.size());
  SourcePos pos;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      line_start = i + 1;
    }
  }
  pos.column = static_cast<std::uint32_t>(end - line_start) + 1;
  return pos;
}

std::uint32_t line_at(std::string_view text, std::uint32_t byte_offset) {
  return position_at(text, byte_offset).line;
}

std::string_view line_slice(std::string_view text, std::uint32_t byte_offset) {
  const std::size_t at = std::min<std::size_t>(byte_offset, text.size());
  std::size_t begin = text.rfind('\n', at == 0 ? 0 : at - 1);
  begin = (begin == std::string_view::npos || at == 0) ? 0 : begin + 1;
  std::size_t end = text.find('\n', at);
  if (end == std::string_view::npos) end = text.size();
  if (end > 0 && end > begin && text[end - 1] == '\r') --end;
  return text.substr(begin, end - begin);
}

namespace {
std::string format_parse_error(const std::string& source_id, SourcePos pos,
                               const std::string& message) {
  return source_id + ":" + std::to_string(pos.line) + ":" +
         std::to_string(pos.column) + ": " + message;
}
}  // namespace

ParseError::ParseError(std::string source_id, SourcePos pos, const std::string& message)
    : std::runtime_error(format_parse_error(source_id, pos, message)),
      source_id_(std::move(source_id)),
      pos_(pos) {}

}  // namespace ufold
