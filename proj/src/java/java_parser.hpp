// Recursive-descent parser for a practical Java subset: packages, imports,
// class/interface/enum/annotation declarations, fields, methods,
// constructors, initializer blocks, generics, the full statement set of
// Java 8, and expressions with standard precedence including lambdas,
// method references, casts and creations. Produces the labeled tree the
// matcher consumes; every node's span is the byte range of its tokens.
#pragma once

#include <string>
#include <string_view>

#include "ufold/syntax_tree.hpp"

namespace ufold::java {

/// Throws ParseError (with file position) on input outside the subset.
SyntaxNode parse_compilation_unit(std::string_view source,
                                  const std::string& source_id);

}  // namespace ufold::java
