#include "ufold/syntax_tree.hpp"

namespace ufold {

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

std::uint64_t fnv_bytes(std::uint64_t h, const char* data, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<unsigned char>(data[i]);
    h *= kFnvPrime;
  }
  return h;
}

std::uint64_t fnv_u64(std::uint64_t h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= v & 0xff;
    h *= kFnvPrime;
    v >>= 8;
  }
  return h;
}

NodeMetrics metrics_rec(const SyntaxNode& node,
                        std::vector<NodeMetrics>* out) {
  std::size_t slot = 0;
  if (out) {
    slot = out->size();
    out->emplace_back();
  }
  NodeMetrics m;
  m.size = 1;
  m.height = 1;
  std::uint64_t h = kFnvOffset;
  h = fnv_bytes(h, node.label.data(), node.label.size());
  h = fnv_bytes(h, "\x1f", 1);
  if (node.is_leaf()) {
    h = fnv_bytes(h, node.value.data(), node.value.size());
  }
  for (const SyntaxNode& child : node.children) {
    NodeMetrics cm = metrics_rec(child, out);
    m.size += cm.size;
    if (cm.height + 1 > m.height) m.height = cm.height + 1;
    h = fnv_u64(h, cm.struct_hash);
  }
  m.struct_hash = h;
  if (out) (*out)[slot] = m;
  return m;
}

void normalize_rec(SyntaxNode& node) {
  if (!node.is_leaf()) node.value.clear();
  for (SyntaxNode& child : node.children) normalize_rec(child);
}

std::uint32_t count_rec(const SyntaxNode& node) {
  std::uint32_t n = 1;
  for (const SyntaxNode& child : node.children) n += count_rec(child);
  return n;
}

void preorder_rec(const SyntaxNode& node,
                  std::vector<const SyntaxNode*>& out) {
  out.push_back(&node);
  for (const SyntaxNode& child : node.children) preorder_rec(child, out);
}

}  // namespace

NodeMetrics compute_metrics(const SyntaxNode& node) {
  return metrics_rec(node, nullptr);
}

std::vector<NodeMetrics> compute_metrics_preorder(const SyntaxNode& root) {
  std::vector<NodeMetrics> out;
  metrics_rec(root, &out);
  return out;
}

bool isomorphic(const SyntaxNode& a, const SyntaxNode& b) {
  if (a.label != b.label) return false;
  if (a.children.size() != b.children.size()) return false;
  if (a.is_leaf() && a.value != b.value) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!isomorphic(a.children[i], b.children[i])) return false;
  }
  return true;
}

std::vector<const SyntaxNode*> preorder(const SyntaxNode& root) {
  std::vector<const SyntaxNode*> out;
  preorder_rec(root, out);
  return out;
}

SyntaxTree::SyntaxTree() : root_{"empty", "", {}, {}}, node_count_(1) {}

SyntaxTree::SyntaxTree(SyntaxNode root, std::string source_id,
                       std::shared_ptr<const std::string> source)
    : root_(std::move(root)),
      source_id_(std::move(source_id)),
      source_(std::move(source)) {
  normalize_rec(root_);
  node_count_ = count_rec(root_);
}

}  // namespace ufold
