#include <doctest.h>

#include <set>
#include <stdexcept>

#include "naive.hpp"
#include "sumset/arith.hpp"
#include "sumset/coloring.hpp"
#include "sumset/phi.hpp"
#include "sumset/subgroup.hpp"

using namespace sumset;

namespace {

std::vector<std::vector<int>> class_lists(const Coloring& coloring) {
  std::vector<std::vector<int>> out;
  for (const auto& cls : coloring.classes()) out.push_back(cls.members());
  return out;
}

}  // namespace

TEST_CASE("coloring validation") {
  CHECK_THROWS_AS(Coloring(4, 2, {0, 1, 2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Coloring(4, 2, {0, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Coloring::from_classes(4, 2, {{0, 1}, {1, 2, 3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Coloring::from_classes(4, 2, {{0, 1}, {3}}),
                  std::invalid_argument);
  const Coloring ok = Coloring::from_classes(4, 2, {{0, 2}, {1, 3}});
  CHECK(ok.assignment() == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("block partition examples") {
  CHECK(class_lists(block_partition(12, 5)) ==
        std::vector<std::vector<int>>{
            {0, 1, 2}, {3, 4, 5}, {6, 7}, {8, 9}, {10, 11}});
  CHECK(class_lists(block_partition(7, 2)) ==
        std::vector<std::vector<int>>{{0, 1, 2, 3}, {4, 5, 6}});
  CHECK(class_lists(block_partition(6, 6)) ==
        std::vector<std::vector<int>>{{0}, {1}, {2}, {3}, {4}, {5}});
  // More colors than residues: trailing classes stay empty.
  CHECK(class_lists(block_partition(3, 5)) ==
        std::vector<std::vector<int>>{{0}, {1}, {2}, {}, {}});
}

TEST_CASE("block partition properties to n = 100") {
  for (int n = 2; n <= 100; ++n) {
    for (int k = 2; k <= n; ++k) {
      const Coloring coloring = block_partition(n, k);
      int smallest = n + 1, largest = 0;
      for (const auto& cls : coloring.classes()) {
        smallest = std::min(smallest, cls.size());
        largest = std::max(largest, cls.size());
        if (cls.size() >= 2) {
          // No wrap: members are consecutive integers.
          CHECK(cls.max_member() - cls.min_member() + 1 == cls.size());
        }
      }
      CHECK(largest - smallest <= 1);
      CHECK(largest == ceil_div(n, k));
    }
  }
}

TEST_CASE("coset partition examples") {
  CHECK(class_lists(coset_partition(12, 6)) ==
        std::vector<std::vector<int>>{
            {0, 6}, {1, 7}, {2, 8}, {3, 9}, {4, 10}, {5, 11}});
  CHECK(class_lists(coset_partition(9, 3)) ==
        std::vector<std::vector<int>>{{0, 3, 6}, {1, 4, 7}, {2, 5, 8}});

  // q(8,5) = 4: four cosets of {0,4}, the first split into singletons.
  const Coloring five = coset_partition(8, 5);
  CHECK(five.num_classes() == 5);
  const SubgroupContext ctx = subgroup_of_size(8, 2);
  for (const auto& cls : five.classes()) {
    bool inside = cls.empty();
    for (const auto& coset : ctx.cosets) {
      if (cls.is_subset_of(coset)) inside = true;
    }
    CHECK(inside);
  }
  CHECK(evaluate(five).value <= coset_sumset_size(2));
}

TEST_CASE("coset partition properties to n = 60") {
  for (int n = 2; n <= 60; ++n) {
    for (int k = 2; k <= n; ++k) {
      const int q = largest_divisor_at_most(n, k);
      const SubgroupContext ctx = subgroup_of_size(n, n / q);
      const Coloring coloring = coset_partition(n, k);
      for (const auto& cls : coloring.classes()) {
        bool inside = cls.empty();
        for (const auto& coset : ctx.cosets) {
          if (cls.is_subset_of(coset)) inside = true;
        }
        CHECK(inside);
      }
      CHECK(evaluate(coloring).value <= coset_sumset_size(n / q));
    }
  }
}

TEST_CASE("evaluate examples") {
  // Frozen from the pair-loop oracle: block halves of Z_7.
  const Coloring blocks = block_partition(7, 2);
  CHECK(testhelp::naive_restricted_sumset(blocks.classes()[0]).size() == 5);
  CHECK(testhelp::naive_restricted_sumset(blocks.classes()[1]).size() == 3);
  const Evaluation eval = evaluate(blocks);
  CHECK(eval.class_sumset_sizes == std::vector<int>{5, 3});
  CHECK(eval.value == 5);
  CHECK(eval.argmax_class == 0);

  CHECK(evaluate(coset_partition(9, 3)).class_sumset_sizes ==
        std::vector<int>{3, 3, 3});

  CHECK(evaluate(block_partition(6, 6)).value == 0);
}

TEST_CASE("best construction examples") {
  // (9,3): both constructions reach 3; ties go to blocks.
  const Construction tie = best_construction(9, 3);
  CHECK(tie.method == ConstructionMethod::block);
  CHECK(tie.evaluation.value == 3);

  const Construction even = best_construction(8, 4);
  CHECK(even.method == ConstructionMethod::block);
  CHECK(even.evaluation.value == 1);

  const Construction coset_wins = best_construction(10, 2);
  CHECK(coset_wins.method == ConstructionMethod::coset);
  CHECK(coset_wins.evaluation.value == 5);
}

TEST_CASE("best construction meets the closed-form upper bound to n = 60") {
  for (int n = 2; n <= 60; ++n) {
    for (int k = 2; k <= n; ++k) {
      CHECK(best_construction(n, k).evaluation.value <= phi_upper_bound(n, k));
    }
  }
}
