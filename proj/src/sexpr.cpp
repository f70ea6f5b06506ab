#include "ufold/sexpr.hpp"

#include <cctype>
#include <memory>

#include "ufold/diagnostics.hpp"

namespace ufold {

namespace {

bool is_label_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class SexprParser {
public:
  SexprParser(std::string_view text, std::string source_id)
      : text_(text), source_id_(std::move(source_id)) {}

  SyntaxNode parse_root() {
    skip_ws();
    SyntaxNode root = parse_node();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing text after tree");
    return root;
  }

private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(source_id_, position_at(text_, pos_), message);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  SyntaxNode parse_node() {
    if (peek() != '(') fail("expected '('");
    SyntaxNode node;
    node.span.begin = pos_;
    ++pos_;
    skip_ws();
    if (!is_label_start(peek())) fail("expected node label");
    std::uint32_t label_begin = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    node.label.assign(text_.substr(label_begin, pos_ - label_begin));
    skip_ws();
    if (peek() == '"') node.value = parse_quoted();
    skip_ws();
    while (peek() == '(') {
      node.children.push_back(parse_node());
      skip_ws();
    }
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    node.span.end = pos_;
    return node;
  }

  std::string parse_quoted() {
    ++pos_;  // opening quote
    std::string out;
    while (true) {
      if (pos_ >= text_.size()) fail("unterminated string");
      char c = text_[pos_++];
      if (c == '"') return out;
      if (c != '\\') {
        out.push_back(c);
        continue;
      }
      if (pos_ >= text_.size()) fail("unterminated escape");
      char e = text_[pos_++];
      switch (e) {
        case '"': out.push_back('"'); break;
        case '\\': out.push_back('\\'); break;
        case 'n': out.push_back('\n'); break;
        case 't': out.push_back('\t'); break;
        case 'r': out.push_back('\r'); break;
        default: --pos_; fail("unknown escape sequence");
      }
    }
  }

  std::string_view text_;
  std::string source_id_;
  std::uint32_t pos_ = 0;
};

void append_quoted(std::string& out, const std::string& value) {
  out.push_back('"');
  for (char c : value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('"');
}

void render_rec(const SyntaxNode& node, std::string& out) {
  out.push_back('(');
  out += node.label;
  if (node.is_leaf() && !node.value.empty()) {
    out.push_back(' ');
    append_quoted(out, node.value);
  }
  for (const SyntaxNode& child : node.children) {
    out.push_back(' ');
    render_rec(child, out);
  }
  out.push_back(')');
}

}  // namespace

SyntaxTree parse_sexpr(std::string_view text, std::string source_id) {
  SexprParser parser(text, source_id);
  SyntaxNode root = parser.parse_root();
  auto source = std::make_shared<const std::string>(text);
  return SyntaxTree(std::move(root), std::move(source_id), std::move(source));
}

std::string to_sexpr(const SyntaxNode& node) {
  std::string out;
  render_rec(node, out);
  return out;
}

}  // namespace ufold
