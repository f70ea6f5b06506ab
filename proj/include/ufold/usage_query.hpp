// ufold/usage_query.hpp - what to look for and what was found
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ufold/syntax_tree.hpp"

namespace ufold {

/// How an identifier occurrence is used at its site.
enum class UsageKind { call, type_reference, other };

/// Which enclosing construct supplied a usage's context tree.
enum class ContextKind { method, top_level_declaration, file };

struct SymbolQuery {
  std::string name;
  /// Keep only occurrences of this kind; empty means any.
  std::optional<UsageKind> kind_filter;
  /// Keep only calls passing exactly this many arguments.
  std::optional<std::uint32_t> arity_filter;
};

/// One matched occurrence plus the subtree it will be compared by.
///
/// `context` is the smallest enclosing method declaration, falling back to
/// the enclosing top-level declaration and then the whole file; spans stay
/// absolute within the original source, so usage_span always lies inside
/// context.root().span.
struct UsageSite {
  std::string file;
  Span usage_span;
  std::uint32_t line = 1;
  UsageKind kind = UsageKind::other;
  SyntaxTree context;
  ContextKind context_kind = ContextKind::file;
};

const char* to_string(UsageKind kind);
const char* to_string(ContextKind kind);

/// The usage's enclosing declaration as its own tree, sharing the source
/// handle of `tree`. Picks the smallest enclosing method or constructor
/// declaration, then the smallest enclosing type declaration, then the
/// whole tree; the second result says which one fired.
///
/// Throws std::invalid_argument when usage_span is not inside the tree.
std::pair<SyntaxTree, ContextKind> extract_context(const SyntaxTree& tree,
                                                   Span usage_span);

/// Every identifier occurrence matching the query, one UsageSite each,
/// sorted by (file, byte offset). Occurrences that declare the name
/// (method/type/variable/parameter names, labels) are not usages.
///
/// Kinds: an identifier directly invoked with an argument list is a call;
/// an identifier naming a type (including the segments of a qualified type
/// name) is a type reference; everything else is other. kind_filter drops
/// non-matching sites; arity_filter keeps only calls whose argument list
/// has exactly that many entries.
std::vector<UsageSite> find_usages(std::span<const SyntaxTree> trees,
                                   const SymbolQuery& query);

}  // namespace ufold
