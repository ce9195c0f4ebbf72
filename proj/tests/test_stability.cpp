#include <doctest.h>

#include <random>
#include <stdexcept>

#include "naive.hpp"
#include "sumset/arith.hpp"
#include "sumset/stability.hpp"
#include "sumset/verify.hpp"

using namespace sumset;
using testhelp::set_of_mask;

TEST_CASE("within-coset term") {
  CHECK(within_coset_bound(3, 2) == 1);
  CHECK(within_coset_bound(9, 5) == 3);
  CHECK(within_coset_bound(7, 1) == 0);
  CHECK(within_coset_bound(12, 0) == 0);
  CHECK_THROWS_AS(within_coset_bound(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(within_coset_bound(3, -1), std::invalid_argument);
}

TEST_CASE("cross-coset bound examples") {
  const SubgroupContext h9 = subgroup_of_size(9, 3);

  // {0,3} in the subgroup plus 1 elsewhere; sums {1,3,4} hit the bound.
  const StabilityReport tight = cross_coset_bound(ResidueSet(9, {0, 3, 1}), h9);
  CHECK(tight.heaviest_size == 2);
  CHECK(tight.other_occupied == 1);
  CHECK(tight.within_coset_bound == 1);
  CHECK(tight.cross_bound == 3);
  CHECK(tight.sumset_size ==
        static_cast<int>(testhelp::naive_restricted_sumset({0, 3, 1}, 9).size()));
  CHECK(tight.sumset_size == 3);
  CHECK(tight.cross_tight);

  // Everything inside one coset: no cross terms at all.
  const StabilityReport inside = cross_coset_bound(ResidueSet(9, {1, 4, 7}), h9);
  CHECK(inside.other_occupied == 0);
  CHECK(inside.cross_bound == inside.within_coset_bound);

  // Full subgroup plus one outside element.
  const StabilityReport spread = cross_coset_bound(ResidueSet(9, {0, 3, 6, 1}), h9);
  CHECK(spread.heaviest_size == 3);
  CHECK(spread.other_occupied == 1);
  CHECK(spread.within_coset_bound == 3);
  CHECK(spread.cross_bound == 6);
  CHECK(spread.sumset_size == 6);
  CHECK(spread.cross_tight);

  CHECK_THROWS_AS(cross_coset_bound(ResidueSet(8, {0, 4}), subgroup_of_size(8, 2)),
                  std::invalid_argument);
}

TEST_CASE("internal sums bound examples") {
  // Two full cosets of the size-3 subgroup: 3 + 3 with an odd coset count.
  const SubgroupContext h9 = subgroup_of_size(9, 3);
  CHECK(internal_sums_bound(ResidueSet(9, {0, 3, 6, 1, 4, 7}), h9) == 6);

  // Scattered single elements contribute nothing.
  CHECK(internal_sums_bound(ResidueSet(9, {0, 1, 2}), h9) == 0);

  // Pairs in two cosets of the size-4 subgroup of Z_12: 1 + 1.
  const SubgroupContext h12 = subgroup_of_size(12, 4);
  const ResidueSet a(12, {0, 3, 1, 4});
  CHECK(internal_sums_bound(a, h12) == 2);
  CHECK(restricted_sumset(a).size() >= 2);
}

TEST_CASE("doubling can merge internal contributions when the index is even") {
  // In Z_12 with the size-3 subgroup (index 4), cosets 1 and 3 double to
  // the same coset (2 and 6 ≡ 2 mod 4): one fiber, so only the larger
  // term counts.
  const SubgroupContext h = subgroup_of_size(12, 3);
  ResidueSet a(12);
  for (int x : {1, 5, 9}) a.add(x);       // coset 1, full
  for (int x : {3, 7}) a.add(x);          // coset 3, pair
  // 2*1 = 2 and 2*3 = 6 ≡ 2 (mod 4): one fiber, best term max(3, 1).
  CHECK(internal_sums_bound(a, h) == 3);
}

TEST_CASE("combined bound and the tied-coset gap") {
  // Two tied cosets of size 4 inside Z_15 (subgroup size 5, no capping):
  // internal 5+5 beats cross 5+4.
  const SubgroupContext h15 = subgroup_of_size(15, 5);
  ResidueSet a(15);
  for (int x : {0, 3, 6, 9}) a.add(x);
  for (int x : {1, 4, 7, 10}) a.add(x);
  const StabilityReport report = combined_bound(a, h15);
  CHECK(report.heaviest_size == 4);
  CHECK(report.tie_count == 2);
  CHECK(report.internal_bound == 10);
  CHECK(report.cross_bound == 9);
  CHECK(report.combined_bound == 10);
  CHECK(report.internal_bound - report.cross_bound == 1);
  CHECK(report.sumset_size >= report.combined_bound);

  // Size-3 tied cosets: both routes coincide.
  const SubgroupContext h9 = subgroup_of_size(9, 3);
  const StabilityReport equal =
      combined_bound(ResidueSet(9, {0, 3, 6, 1, 4, 7}), h9);
  CHECK(equal.internal_bound == 6);
  CHECK(equal.cross_bound == 6);

  // One occupied coset: combined collapses to the within-coset term.
  const StabilityReport solo = combined_bound(ResidueSet(9, {1, 4, 7}), h9);
  CHECK(solo.combined_bound == solo.within_coset_bound);
  CHECK(solo.internal_bound == solo.within_coset_bound);
}

TEST_CASE("threshold check") {
  const SubgroupContext h9 = subgroup_of_size(9, 3);

  // Concentration: a full coset has sumset 3 <= t+s and heaviest size 3,
  // so the set must live in one coset.
  const StabilityReport forced = threshold_check(ResidueSet(9, {1, 4, 7}), h9, 0);
  REQUIRE(forced.threshold_applicable.has_value());
  CHECK(*forced.threshold_applicable);
  REQUIRE(forced.concentrated.has_value());
  CHECK(*forced.concentrated);
  CHECK(forced.other_occupied == 0);

  // Exhaustive over Z_9: every set with sumset <= 3 and a full coset
  // inside it stays within that coset.
  for (std::uint64_t mask = 0; mask < (1ULL << 9); ++mask) {
    const ResidueSet a = set_of_mask(9, mask);
    const StabilityReport report = threshold_check(a, h9, 0);
    if (report.heaviest_size == 3 && *report.threshold_applicable) {
      CHECK(report.other_occupied == 0);
    }
  }

  // Vacuous premise: a large sumset disables every claim.
  const StabilityReport vacuous =
      threshold_check(ResidueSet(9, {0, 1, 2, 3, 4, 5}), h9, 0);
  CHECK(!*vacuous.threshold_applicable);

  // Empty set: nothing asserted, nothing concentrated.
  const StabilityReport empty = threshold_check(ResidueSet(9), h9, 0);
  CHECK(*empty.threshold_applicable);
  CHECK(!empty.other_occupied_cap.has_value());
  CHECK(!empty.concentrated.has_value());

  CHECK_THROWS_AS(threshold_check(ResidueSet(9, {0}), h9, -1),
                  std::invalid_argument);
}

TEST_CASE("subset sums stay inside the doubled coset") {
  std::mt19937_64 rng(31337);
  for (int n : {9, 12, 15, 20, 28}) {
    for (int t : divisors(n)) {
      if (t < 2) continue;
      const SubgroupContext ctx = subgroup_of_size(n, t);
      for (int rep = 0; rep < ctx.index; ++rep) {
        const auto members = ctx.cosets[rep].members();
        const ResidueSet& doubled = ctx.cosets[(2 * rep) % ctx.index];
        for (int trial = 0; trial < 16; ++trial) {
          ResidueSet subset(n);
          for (int x : members) {
            if (rng() & 1) subset.add(x);
          }
          CHECK(restricted_sumset(subset).is_subset_of(doubled));
        }
      }
    }
  }
}

TEST_CASE("both bounds hold on random sets up to n = 64") {
  std::mt19937_64 rng(0xabcddcba);
  int checked = 0;
  while (checked < 100000) {
    const int n = 3 + static_cast<int>(rng() % 62);
    std::vector<int> eligible;
    for (int t : divisors(n)) {
      if (t >= 3) eligible.push_back(t);
    }
    if (eligible.empty()) continue;
    const int t = eligible[rng() % eligible.size()];
    const SubgroupContext ctx = subgroup_of_size(n, t);
    ResidueSet a(n);
    const int target = static_cast<int>(rng() % (n + 1));
    for (int i = 0; i < target; ++i) a.add(static_cast<int>(rng() % n));
    // combined_bound throws if either inequality fails.
    const StabilityReport report = combined_bound(a, ctx);
    CHECK(report.sumset_size >= report.combined_bound);
    ++checked;
  }
}

TEST_CASE("exhaustive stability sweep at small moduli") {
  const SuiteResult result = verify_thm6(10);
  CHECK(result.violations == 0);
  CHECK(result.cases > 0);
}
