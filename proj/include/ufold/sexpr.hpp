// ufold/sexpr.hpp - textual tree exchange format
//
// A tree is written as nested lists: `(label "value" child...)`. The label
// is a bare atom, the quoted value is optional and only kept on leaves, and
// children follow in order. Example:
//
//   (block (asg (ident "x") (num "1")) (ret (ident "x")))
//
// Parsing assigns each node the byte range of its own parenthesized form,
// so spans nest exactly like the tree does.
#pragma once

#include <string>
#include <string_view>

#include "ufold/syntax_tree.hpp"

namespace ufold {

/// Parses one tree; throws ParseError on malformed input or trailing text.
SyntaxTree parse_sexpr(std::string_view text, std::string source_id);

/// Canonical single-line rendering; inverse of parse_sexpr up to spans.
std::string to_sexpr(const SyntaxNode& node);

}  // namespace ufold
