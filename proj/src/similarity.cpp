#include "ufold/similarity.hpp"

#include <cstdint>

namespace ufold {

namespace {

std::vector<const SyntaxTree*> context_pointers(
    std::span<const UsageSite> usages) {
  std::vector<const SyntaxTree*> out;
  out.reserve(usages.size());
  for (const UsageSite& u : usages) out.push_back(&u.context);
  return out;
}

SimilarityMatrix build_impl(std::span<const SyntaxTree* const> contexts,
                            const MatcherConfig& cfg, bool parallel) {
  const std::size_t n = contexts.size();
  SimilarityMatrix m(n);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> todo;
  if (n > 1) todo.reserve(n * (n - 1) / 2);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) todo.emplace_back(i, j);
  }

  const std::int64_t total = static_cast<std::int64_t>(todo.size());
  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::int64_t k = 0; k < total; ++k) {
      auto [i, j] = todo[k];
      m.set(i, j, score(diff(*contexts[i], *contexts[j], cfg)));
    }
  } else {
    for (std::int64_t k = 0; k < total; ++k) {
      auto [i, j] = todo[k];
      m.set(i, j, score(diff(*contexts[i], *contexts[j], cfg)));
    }
  }
  return m;
}

}  // namespace

double score(const DiffResult& d) {
  const double numer = 2.0 * static_cast<double>(d.shared);
  const double denom =
      numer + static_cast<double>(d.unmatched1) + static_cast<double>(d.unmatched2);
  if (denom == 0.0) return 1.0;
  return numer / denom;
}

SimilarityMatrix::SimilarityMatrix(std::size_t n) : n_(n), cells_(n * n, 0.0) {
  for (std::size_t i = 0; i < n_; ++i) cells_[i * n_ + i] = 1.0;
}

void SimilarityMatrix::set(std::size_t i, std::size_t j, double v) {
  cells_[i * n_ + j] = v;
  cells_[j * n_ + i] = v;
}

SimilarityMatrix build_context_matrix(
    std::span<const SyntaxTree* const> contexts, const MatcherConfig& cfg) {
  return build_impl(contexts, cfg, true);
}

SimilarityMatrix build_context_matrix_serial(
    std::span<const SyntaxTree* const> contexts, const MatcherConfig& cfg) {
  return build_impl(contexts, cfg, false);
}

SimilarityMatrix build_matrix(std::span<const UsageSite> usages,
                              const MatcherConfig& cfg) {
  return build_context_matrix(context_pointers(usages), cfg);
}

SimilarityMatrix build_matrix_serial(std::span<const UsageSite> usages,
                                     const MatcherConfig& cfg) {
  return build_context_matrix_serial(context_pointers(usages), cfg);
}

}  // namespace ufold
