#include "ufold/usage_query.hpp"

namespace ufold {

const char* to_string(UsageKind kind) {
  switch (kind) {
    case UsageKind::call: return "call";
    case UsageKind::type_reference: return "type-reference";
    case UsageKind::other: return "other";
  }
  return "other";
}

const char* to_string(ContextKind kind) {
  switch (kind) {
    case ContextKind::method: return "method";
    case ContextKind::top_level_declaration: return "top-level-declaration";
    case ContextKind::file: return "file";
  }
  return "file";
}

}  // namespace ufold
