#include <algorithm>
#include <stdexcept>
#include <string_view>

#include "ufold/diagnostics.hpp"
#include "ufold/usage_query.hpp"

namespace ufold {

namespace {

bool is_method_label(std::string_view label) {
  return label == "method_declaration" || label == "constructor_declaration";
}

bool is_type_decl_label(std::string_view label) {
  return label == "class_declaration" || label == "interface_declaration" ||
         label == "enum_declaration";
}

// Parents whose first direct identifier child is a declared name, not a use.
bool names_first_identifier(std::string_view label) {
  return is_method_label(label) || is_type_decl_label(label) ||
         label == "enum_constant" || label == "type_parameter" ||
         label == "parameter" || label == "catch_parameter" ||
         label == "labeled_statement" || label == "break_statement" ||
         label == "continue_statement";
}

std::size_t first_identifier_index(const SyntaxNode& parent) {
  for (std::size_t i = 0; i < parent.children.size(); ++i) {
    if (parent.children[i].label == "identifier") return i;
  }
  return parent.children.size();
}

bool is_declaration_site(const SyntaxNode& parent, std::size_t idx) {
  std::string_view label = parent.label;
  if (names_first_identifier(label)) return idx == first_identifier_index(parent);
  // declarator's name slot; later children are the initializer
  if (label == "variable_declarator") return idx == 0;
  // a bare identifier in a lambda parameter list declares that parameter
  if (label == "lambda_parameters") return true;
  return false;
}

UsageKind classify(const SyntaxNode& parent, std::size_t idx,
                   const SyntaxNode* grandparent) {
  if (parent.label == "method_call" && idx + 1 < parent.children.size() &&
      parent.children[idx + 1].label == "argument_list") {
    return UsageKind::call;
  }
  if (parent.label == "type") return UsageKind::type_reference;
  if (parent.label == "scoped_identifier" && grandparent != nullptr &&
      grandparent->label == "type") {
    return UsageKind::type_reference;
  }
  return UsageKind::other;
}

struct Finder {
  const SyntaxTree& tree;
  const SymbolQuery& query;
  std::vector<UsageSite>& out;

  void visit(const SyntaxNode& node, const SyntaxNode* parent) {
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      const SyntaxNode& child = node.children[i];
      if (child.label == "identifier" && child.value == query.name) {
        consider(node, i, parent);
      }
      visit(child, &node);
    }
  }

  void consider(const SyntaxNode& parent, std::size_t idx,
                const SyntaxNode* grandparent) {
    if (is_declaration_site(parent, idx)) return;
    UsageKind kind = classify(parent, idx, grandparent);
    if (query.kind_filter && *query.kind_filter != kind) return;
    if (query.arity_filter) {
      if (kind != UsageKind::call) return;
      const SyntaxNode& args = parent.children[idx + 1];
      if (args.children.size() != *query.arity_filter) return;
    }

    const SyntaxNode& occurrence = parent.children[idx];
    UsageSite site;
    site.file = tree.source_id();
    site.usage_span = occurrence.span;
    if (tree.source()) {
      site.line = position_at(*tree.source(), occurrence.span.begin).line;
    }
    site.kind = kind;
    auto [context, context_kind] = extract_context(tree, occurrence.span);
    site.context = std::move(context);
    site.context_kind = context_kind;
    out.push_back(std::move(site));
  }
};

}  // namespace

std::pair<SyntaxTree, ContextKind> extract_context(const SyntaxTree& tree,
                                                   Span usage_span) {
  const SyntaxNode* cur = &tree.root();
  if (!cur->span.contains(usage_span)) {
    throw std::invalid_argument("usage span lies outside the tree: " +
                                tree.source_id());
  }
  const SyntaxNode* innermost_method = nullptr;
  const SyntaxNode* innermost_type = nullptr;
  while (true) {
    if (is_method_label(cur->label)) {
      innermost_method = cur;
    } else if (is_type_decl_label(cur->label)) {
      innermost_type = cur;
    }
    const SyntaxNode* next = nullptr;
    for (const SyntaxNode& child : cur->children) {
      if (child.span.contains(usage_span)) {
        next = &child;
        break;
      }
    }
    if (next == nullptr) break;
    cur = next;
  }

  const SyntaxNode* picked = &tree.root();
  ContextKind kind = ContextKind::file;
  if (innermost_method != nullptr) {
    picked = innermost_method;
    kind = ContextKind::method;
  } else if (innermost_type != nullptr) {
    picked = innermost_type;
    kind = ContextKind::top_level_declaration;
  }
  return {SyntaxTree(*picked, tree.source_id(), tree.source()), kind};
}

std::vector<UsageSite> find_usages(std::span<const SyntaxTree> trees,
                                   const SymbolQuery& query) {
  std::vector<UsageSite> sites;
  for (const SyntaxTree& tree : trees) {
    Finder finder{tree, query, sites};
    finder.visit(tree.root(), nullptr);
  }
  std::sort(sites.begin(), sites.end(),
            [](const UsageSite& a, const UsageSite& b) {
              if (a.file != b.file) return a.file < b.file;
              return a.usage_span.begin < b.usage_span.begin;
            });
  return sites;
}

}  // namespace ufold
