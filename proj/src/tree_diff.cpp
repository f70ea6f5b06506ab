#include "ufold/tree_diff.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

namespace ufold {

namespace {

// Flat per-node view of one tree, addressed by preorder index. The
// descendants of node i are exactly the indices in (i, i + size(i)).
struct TreeIndex {
  std::vector<const SyntaxNode*> nodes;  // preorder
  std::vector<std::int32_t> parent;     // -1 for the root
  std::vector<NodeMetrics> metrics;
  std::vector<std::uint32_t> post;      // preorder indices in postorder

  explicit TreeIndex(const SyntaxTree& tree)
      : metrics(compute_metrics_preorder(tree.root())) {
    nodes.reserve(metrics.size());
    parent.reserve(metrics.size());
    post.reserve(metrics.size());
    walk(tree.root(), -1);
  }

  std::uint32_t size() const {
    return static_cast<std::uint32_t>(nodes.size());
  }
  std::uint32_t subtree_size(std::uint32_t i) const { return metrics[i].size; }
  std::uint32_t height(std::uint32_t i) const { return metrics[i].height; }
  std::uint64_t hash(std::uint32_t i) const { return metrics[i].struct_hash; }
  std::uint32_t begin(std::uint32_t i) const { return nodes[i]->span.begin; }

private:
  void walk(const SyntaxNode& node, std::int32_t parent_idx) {
    std::uint32_t idx = size();
    nodes.push_back(&node);
    parent.push_back(parent_idx);
    for (const SyntaxNode& child : node.children) {
      walk(child, static_cast<std::int32_t>(idx));
    }
    post.push_back(idx);
  }
};

class MappingState {
public:
  MappingState(std::uint32_t n1, std::uint32_t n2)
      : to2_(n1, -1), to1_(n2, -1) {}

  bool mapped1(std::uint32_t i) const { return to2_[i] >= 0; }
  bool mapped2(std::uint32_t j) const { return to1_[j] >= 0; }
  std::int32_t dst_of(std::uint32_t i) const { return to2_[i]; }

  void link(std::uint32_t i, std::uint32_t j) {
    assert(!mapped1(i) && !mapped2(j));
    to2_[i] = static_cast<std::int32_t>(j);
    to1_[j] = static_cast<std::int32_t>(i);
  }

  // Pairs up two isomorphic subtrees: preorder enumerations align.
  void link_subtrees(std::uint32_t i, std::uint32_t j, std::uint32_t count) {
    for (std::uint32_t k = 0; k < count; ++k) link(i + k, j + k);
  }

  NodeMapping pairs() const {
    NodeMapping out;
    for (std::uint32_t i = 0; i < to2_.size(); ++i) {
      if (to2_[i] >= 0) out.emplace_back(i, static_cast<std::uint32_t>(to2_[i]));
    }
    return out;
  }

private:
  std::vector<std::int32_t> to2_;
  std::vector<std::int32_t> to1_;
};

// Dice over descendants: how much of the two subtrees' insides the mapping
// already ties together. The nodes themselves do not count.
double descendant_dice(const TreeIndex& a, const TreeIndex& b,
                       std::uint32_t i, std::uint32_t j,
                       const MappingState& m) {
  std::uint32_t d1 = a.subtree_size(i) - 1;
  std::uint32_t d2 = b.subtree_size(j) - 1;
  if (d1 + d2 == 0) return 0.0;
  std::uint32_t tied = 0;
  std::uint32_t j_begin = j + 1;
  std::uint32_t j_end = j + b.subtree_size(j);
  for (std::uint32_t k = i + 1; k < i + a.subtree_size(i); ++k) {
    std::int32_t dst = m.dst_of(k);
    if (dst >= 0 && static_cast<std::uint32_t>(dst) >= j_begin &&
        static_cast<std::uint32_t>(dst) < j_end) {
      ++tied;
    }
  }
  return 2.0 * static_cast<double>(tied) / static_cast<double>(d1 + d2);
}

double parent_dice(const TreeIndex& a, const TreeIndex& b, std::uint32_t i,
                   std::uint32_t j, const MappingState& m) {
  std::int32_t p1 = a.parent[i];
  std::int32_t p2 = b.parent[j];
  if (p1 < 0 || p2 < 0) return 0.0;
  return descendant_dice(a, b, static_cast<std::uint32_t>(p1),
                         static_cast<std::uint32_t>(p2), m);
}

// Subtree roots pending a match, grouped by height, tallest group first.
class HeightList {
public:
  explicit HeightList(const TreeIndex& tree) : tree_(tree) {}

  bool empty() const { return buckets_.empty(); }
  std::uint32_t peek() const { return buckets_.begin()->first; }

  void push(std::uint32_t i) { buckets_[tree_.height(i)].push_back(i); }

  std::vector<std::uint32_t> pop() {
    auto it = buckets_.begin();
    std::vector<std::uint32_t> level = std::move(it->second);
    buckets_.erase(it);
    std::sort(level.begin(), level.end());
    return level;
  }

  void open(std::uint32_t i) {
    std::uint32_t child = i + 1;
    std::uint32_t end = i + tree_.subtree_size(i);
    while (child < end) {
      push(child);
      child += tree_.subtree_size(child);
    }
  }

private:
  const TreeIndex& tree_;
  std::map<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> buckets_;
};

void run_top_down(const TreeIndex& a, const TreeIndex& b,
                  const MatcherConfig& cfg, MappingState& m) {
  HeightList l1(a);
  HeightList l2(b);
  l1.push(0);
  l2.push(0);

  // Subtree pairs with several isomorphic counterparts, settled at the end.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> ambiguous;

  while (!l1.empty() && !l2.empty() &&
         std::min(l1.peek(), l2.peek()) >= cfg.min_height) {
    if (l1.peek() > l2.peek()) {
      for (std::uint32_t i : l1.pop()) l1.open(i);
      continue;
    }
    if (l2.peek() > l1.peek()) {
      for (std::uint32_t j : l2.pop()) l2.open(j);
      continue;
    }

    std::vector<std::uint32_t> h1 = l1.pop();
    std::vector<std::uint32_t> h2 = l2.pop();

    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> by_hash2;
    for (std::uint32_t j : h2) by_hash2[b.hash(j)].push_back(j);

    std::unordered_set<std::uint64_t> done;
    std::unordered_set<std::uint32_t> pending1, pending2;
    for (std::uint32_t i : h1) {
      if (!done.insert(a.hash(i)).second) continue;
      auto it = by_hash2.find(a.hash(i));
      if (it == by_hash2.end()) continue;

      // Verify against hash collisions before trusting the bucket.
      const SyntaxNode& shape = *a.nodes[i];
      std::vector<std::uint32_t> s1, s2;
      for (std::uint32_t x : h1) {
        if (a.hash(x) == a.hash(i) && isomorphic(*a.nodes[x], shape)) {
          s1.push_back(x);
        }
      }
      for (std::uint32_t y : it->second) {
        if (isomorphic(*b.nodes[y], shape)) s2.push_back(y);
      }
      if (s2.empty()) continue;

      if (s1.size() == 1 && s2.size() == 1) {
        m.link_subtrees(s1[0], s2[0], a.subtree_size(s1[0]));
      } else {
        for (std::uint32_t x : s1) {
          for (std::uint32_t y : s2) {
            ambiguous.emplace_back(x, y);
            pending1.insert(x);
            pending2.insert(y);
          }
        }
      }
    }

    for (std::uint32_t i : h1) {
      if (!m.mapped1(i) && !pending1.contains(i)) l1.open(i);
    }
    for (std::uint32_t j : h2) {
      if (!m.mapped2(j) && !pending2.contains(j)) l2.open(j);
    }
  }

  // Settle ambiguous pairs greedily: best parent agreement first, then
  // leftmost byte offsets, then preorder position for full determinism.
  struct Ranked {
    double dice;
    std::uint32_t begin1, begin2, i, j;
  };
  std::vector<Ranked> ranked;
  ranked.reserve(ambiguous.size());
  for (auto [i, j] : ambiguous) {
    ranked.push_back({parent_dice(a, b, i, j, m), a.begin(i), b.begin(j), i, j});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& x, const Ranked& y) {
    if (x.dice != y.dice) return x.dice > y.dice;
    if (x.begin1 != y.begin1) return x.begin1 < y.begin1;
    if (x.begin2 != y.begin2) return x.begin2 < y.begin2;
    if (x.i != y.i) return x.i < y.i;
    return x.j < y.j;
  });
  for (const Ranked& r : ranked) {
    if (m.mapped1(r.i) || m.mapped2(r.j)) continue;
    m.link_subtrees(r.i, r.j, a.subtree_size(r.i));
  }
}

void run_bottom_up(const TreeIndex& a, const TreeIndex& b,
                   const MatcherConfig& cfg, MappingState& m) {
  std::unordered_map<std::string_view, std::vector<std::uint32_t>> by_label;
  for (std::uint32_t j = 0; j < b.size(); ++j) {
    by_label[b.nodes[j]->label].push_back(j);
  }

  for (std::uint32_t i : a.post) {
    if (m.mapped1(i) || a.nodes[i]->is_leaf()) continue;
    auto it = by_label.find(a.nodes[i]->label);
    if (it == by_label.end()) continue;

    double best_dice = cfg.dice_threshold;
    std::int32_t best = -1;
    for (std::uint32_t j : it->second) {
      if (m.mapped2(j)) continue;
      double d = descendant_dice(a, b, i, j, m);
      if (d > best_dice) {  // candidates scan in preorder, so the first
        best_dice = d;      // maximum is also the leftmost one
        best = static_cast<std::int32_t>(j);
      }
    }
    if (best >= 0) m.link(i, static_cast<std::uint32_t>(best));
  }
}

DiffResult finish(const TreeIndex& a, const TreeIndex& b, MappingState& m) {
  DiffResult r;
  r.mapping = m.pairs();
  r.shared = static_cast<std::uint32_t>(r.mapping.size());
  r.unmatched1 = a.size() - r.shared;
  r.unmatched2 = b.size() - r.shared;
  return r;
}

}  // namespace

NodeMapping match_top_down(const SyntaxTree& t1, const SyntaxTree& t2,
                           const MatcherConfig& cfg) {
  TreeIndex a(t1);
  TreeIndex b(t2);
  MappingState m(a.size(), b.size());
  run_top_down(a, b, cfg, m);
  return m.pairs();
}

NodeMapping match_bottom_up(const SyntaxTree& t1, const SyntaxTree& t2,
                            const NodeMapping& partial,
                            const MatcherConfig& cfg) {
  TreeIndex a(t1);
  TreeIndex b(t2);
  MappingState m(a.size(), b.size());
  for (auto [i, j] : partial) m.link(i, j);
  run_bottom_up(a, b, cfg, m);
  return m.pairs();
}

DiffResult diff(const SyntaxTree& t1, const SyntaxTree& t2,
                const MatcherConfig& cfg) {
  TreeIndex a(t1);
  TreeIndex b(t2);
  MappingState m(a.size(), b.size());
  if (a.size() == b.size() && a.hash(0) == b.hash(0) &&
      isomorphic(t1.root(), t2.root())) {
    m.link_subtrees(0, 0, a.size());
    return finish(a, b, m);
  }
  run_top_down(a, b, cfg, m);
  run_bottom_up(a, b, cfg, m);
  return finish(a, b, m);
}

}  // namespace ufold
