// Tokenizer for the Java frontend. Comments and whitespace are dropped.
// '>' is always emitted as a single-character token so the parser can
// treat it as either a generics closer or, when tokens are adjacent, glue
// it back into a shift operator; '<' keeps longest-match since '<<' can
// never open a type-argument list.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ufold::java {

enum class TokKind {
  identifier,
  keyword,
  number,
  string,
  character,
  punct,  // operators and separators
  eof,
};

struct Token {
  TokKind kind = TokKind::eof;
  std::string_view text;
  std::uint32_t begin = 0;
  std::uint32_t end = 0;

  bool is(TokKind k) const { return kind == k; }
  bool is(std::string_view t) const { return text == t; }
  bool is(TokKind k, std::string_view t) const { return kind == k && text == t; }
};

/// Throws ParseError on malformed input (unterminated comment/literal).
std::vector<Token> lex(std::string_view source, const std::string& source_id);

bool is_keyword(std::string_view word);

}  // namespace ufold::java
