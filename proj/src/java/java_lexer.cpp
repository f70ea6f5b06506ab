#include "java/java_lexer.hpp"

#include <array>
#include <cctype>

#include "ufold/diagnostics.hpp"

namespace ufold::java {

namespace {

// reserved words plus the literal words true/false/null and 'var'
constexpr std::array<std::string_view, 54> kKeywords = {
    "abstract", "assert",     "boolean",  "break",      "byte",
    "case",     "catch",      "char",     "class",      "const",
    "continue", "default",    "do",       "double",     "else",
    "enum",     "extends",    "false",    "final",      "finally",
    "float",    "for",        "goto",     "if",         "implements",
    "import",   "instanceof", "int",      "interface",  "long",
    "native",   "new",        "null",     "package",    "private",
    "protected", "public",    "return",   "short",      "static",
    "strictfp", "super",      "switch",   "synchronized", "this",
    "throw",    "throws",     "transient", "true",      "try",
    "var",      "void",       "volatile", "while",
};

// Multi-character operators, longest first within each leading character.
// Shift forms ('>>', '>>>', '>>=', '>>>=') are deliberately absent: they
// reach the parser as runs of adjacent '>' (and '>=') tokens. '>=' itself
// is safe to glue because a generics closer is never followed directly
// by '='.
constexpr std::array<std::string_view, 22> kCompound = {
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=",
    "<<",  "+=",  "-=", "*=", "/=", "%=", "&=", "|=", "^=", ">=", "@",
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

class Lexer {
public:
  Lexer(std::string_view src, const std::string& source_id)
      : src_(src), source_id_(source_id) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_trivia();
      if (pos_ >= src_.size()) break;
      out.push_back(next_token());
    }
    out.push_back({TokKind::eof, src_.substr(src_.size()),
                   static_cast<std::uint32_t>(src_.size()),
                   static_cast<std::uint32_t>(src_.size())});
    return out;
  }

private:
  [[noreturn]] void fail(std::uint32_t at, const std::string& message) const {
    throw ParseError(source_id_, position_at(src_, at), message);
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == '/' && peek(1) == '*') {
        std::uint32_t start = pos_;
        pos_ += 2;
        while (pos_ + 1 < src_.size() &&
               !(src_[pos_] == '*' && src_[pos_ + 1] == '/')) {
          ++pos_;
        }
        if (pos_ + 1 >= src_.size()) fail(start, "unterminated block comment");
        pos_ += 2;
      } else {
        return;
      }
    }
  }

  Token make(TokKind kind, std::uint32_t begin) const {
    return {kind, src_.substr(begin, pos_ - begin), begin, pos_};
  }

  Token next_token() {
    std::uint32_t begin = pos_;
    char c = src_[pos_];

    if (ident_start(c)) {
      while (pos_ < src_.size() && ident_char(src_[pos_])) ++pos_;
      Token t = make(TokKind::identifier, begin);
      if (is_keyword(t.text)) t.kind = TokKind::keyword;
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      return lex_number(begin);
    }
    if (c == '"') return lex_string(begin);
    if (c == '\'') return lex_char(begin);

    for (std::string_view op : kCompound) {
      if (src_.substr(pos_).starts_with(op)) {
        pos_ += op.size();
        return make(TokKind::punct, begin);
      }
    }
    if (std::string_view("(){}[];,.<>=!~?:+-*/%&|^").find(c) !=
        std::string_view::npos) {
      ++pos_;
      return make(TokKind::punct, begin);
    }
    fail(begin, "unexpected character");
  }

  Token lex_number(std::uint32_t begin) {
    bool hex = peek() == '0' && (peek(1) == 'x' || peek(1) == 'X');
    if (hex) pos_ += 2;
    bool seen_dot = false;
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos_;
        // decimal exponents may carry a sign
        if (!hex && (c == 'e' || c == 'E') && (peek() == '+' || peek() == '-')) {
          ++pos_;
        }
        if (hex && (c == 'p' || c == 'P') && (peek() == '+' || peek() == '-')) {
          ++pos_;
        }
      } else if (c == '.' && !seen_dot && !hex) {
        // a second dot (range-like ellipsis) ends the literal
        if (std::isdigit(static_cast<unsigned char>(peek(1))) ||
            !ident_start(peek(1))) {
          if (peek(1) == '.') break;
          seen_dot = true;
          ++pos_;
        } else {
          break;
        }
      } else {
        break;
      }
    }
    return make(TokKind::number, begin);
  }

  Token lex_quoted(std::uint32_t begin, char close, const char* what) {
    ++pos_;
    while (pos_ < src_.size() && src_[pos_] != close && src_[pos_] != '\n') {
      pos_ += src_[pos_] == '\\' ? 2 : 1;
    }
    if (pos_ >= src_.size() || src_[pos_] != close) {
      fail(begin, std::string("unterminated ") + what);
    }
    ++pos_;
    return make(close == '"' ? TokKind::string : TokKind::character, begin);
  }

  Token lex_string(std::uint32_t begin) {
    return lex_quoted(begin, '"', "string literal");
  }

  Token lex_char(std::uint32_t begin) {
    return lex_quoted(begin, '\'', "character literal");
  }

  std::string_view src_;
  const std::string& source_id_;
  std::uint32_t pos_ = 0;
};

}  // namespace

bool is_keyword(std::string_view word) {
  for (std::string_view k : kKeywords) {
    if (k == word) return true;
  }
  return false;
}

std::vector<Token> lex(std::string_view source, const std::string& source_id) {
  return Lexer(source, source_id).run();
}

}  // namespace ufold::java
