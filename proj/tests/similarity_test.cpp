#include "ufold/similarity.hpp"

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>

#include "support/tree_gen.hpp"
#include "ufold/sexpr.hpp"

using namespace ufold;

namespace {

DiffResult counts(std::uint32_t shared, std::uint32_t u1, std::uint32_t u2) {
  DiffResult d;
  d.shared = shared;
  d.unmatched1 = u1;
  d.unmatched2 = u2;
  return d;
}

}  // namespace

TEST_SUITE("similarity") {

TEST_CASE("score endpoints and a plain ratio") {
  CHECK(score(counts(10, 0, 0)) == 1.0);
  CHECK(score(counts(0, 5, 6)) == 0.0);
  CHECK(score(counts(8, 2, 2)) == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("two empty trees count as maximally similar") {
  CHECK(score(counts(0, 0, 0)) == 1.0);
}

TEST_CASE("sampled count triples: range, exactness, monotonicity") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::uint32_t> dist(0, 5000);
  for (int k = 0; k < 10000; ++k) {
    std::uint32_t s = dist(rng), u1 = dist(rng), u2 = dist(rng);
    double got = score(counts(s, u1, u2));

    CHECK(got >= 0.0);
    CHECK(got <= 1.0);
    CHECK((got == 1.0) == (u1 == 0 && u2 == 0));

    long double exact =
        (2.0L * s + u1 + u2) == 0.0L
            ? 1.0L
            : 2.0L * s / (2.0L * s + u1 + u2);
    CHECK(std::abs(static_cast<long double>(got) - exact) < 1e-12L);

    if (u1 + u2 > 0) {
      CHECK(score(counts(s + 1, u1, u2)) > got);
    }
  }
}

TEST_CASE("matrix of one or two usages") {
  SyntaxTree a = parse_sexpr("(m (b (x \"1\") (y \"2\")))", "a");
  SyntaxTree b = parse_sexpr("(m (b (x \"1\") (y \"2\")))", "b");

  const SyntaxTree* one[] = {&a};
  SimilarityMatrix m1 = build_context_matrix(one);
  CHECK(m1.size() == 1);
  CHECK(m1.at(0, 0) == 1.0);

  const SyntaxTree* two[] = {&a, &b};
  SimilarityMatrix m2 = build_context_matrix(two);
  CHECK(m2.at(0, 1) == 1.0);
  CHECK(m2.at(1, 0) == 1.0);
}

TEST_CASE("matrix entries equal independently computed pair scores") {
  // a and b differ only in the method-name leaf: the params and block
  // subtrees anchor whole, the method node follows via dice, and just the
  // two name leaves stay unmatched, giving 2*9/(2*9+1+1).
  SyntaxTree a = parse_sexpr(
      "(method (ident \"f\") (params (p \"n\")) (block"
      " (asg (ident \"x\") (num \"1\")) (ret (ident \"x\"))))", "a");
  SyntaxTree b = parse_sexpr(
      "(method (ident \"g\") (params (p \"n\")) (block"
      " (asg (ident \"x\") (num \"1\")) (ret (ident \"x\"))))", "b");
  SyntaxTree c = parse_sexpr("(loop (cond (flag \"p\")) (brk))", "c");

  const SyntaxTree* contexts[] = {&a, &b, &c};
  SimilarityMatrix m = build_context_matrix(contexts);

  CHECK(m.at(0, 1) == score(diff(a, b)));
  CHECK(m.at(0, 2) == score(diff(a, c)));
  CHECK(m.at(1, 2) == score(diff(b, c)));
  CHECK(m.at(0, 1) == doctest::Approx(18.0 / 20.0).epsilon(1e-15));
  CHECK(m.at(0, 2) == 0.0);
  CHECK(m.at(1, 2) == 0.0);
}

TEST_CASE("random context sets: symmetry, diagonal, range, and the serial"
          " reference agreeing bit for bit") {
  testing::TreeGen gen(555);
  for (int round = 0; round < 10; ++round) {
    std::vector<SyntaxTree> trees;
    std::size_t n = 2 + gen.rng()() % 9;
    SyntaxNode base = gen.tree(20 + gen.rng()() % 20);
    for (std::size_t i = 0; i < n; ++i) {
      SyntaxNode variant = base;
      gen.mutate(variant, static_cast<int>(gen.rng()() % 6));
      trees.push_back(testing::materialize(variant, "t" + std::to_string(i)));
    }
    std::vector<const SyntaxTree*> ptrs;
    for (const SyntaxTree& t : trees) ptrs.push_back(&t);

    SimilarityMatrix par = build_context_matrix(ptrs);
    SimilarityMatrix ser = build_context_matrix_serial(ptrs);

    REQUIRE(par.size() == n);
    REQUIRE(ser.size() == n);
    CHECK(std::memcmp(par.cells().data(), ser.cells().data(),
                      n * n * sizeof(double)) == 0);

    for (std::size_t i = 0; i < n; ++i) {
      CHECK(par.at(i, i) == 1.0);
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(par.at(i, j) == par.at(j, i));
        CHECK(par.at(i, j) >= 0.0);
        CHECK(par.at(i, j) <= 1.0);
      }
    }
  }
}

}  // TEST_SUITE
