#include <doctest.h>

#include <algorithm>
#include <set>

#include "sumset/arith.hpp"
#include "sumset/oracle.hpp"
#include "sumset/phi.hpp"
#include "sumset/structure.hpp"

using namespace sumset;

TEST_CASE("feasible finds witnesses and rejects impossible thresholds") {
  // Hand-checked: {0,2} sums to {0+2}={2}, {1,3} to {0}.
  const FeasibleResult ok = feasible(4, 2, 1);
  REQUIRE(ok.status == SearchStatus::found);
  CHECK(evaluate(*ok.witness).value <= 1);

  // The prime formula gives 5 for (7,2), so 4 is out of reach.
  CHECK(feasible(7, 2, 4).status == SearchStatus::infeasible);
  CHECK(feasible(7, 2, 5).status == SearchStatus::found);

  // Singletons always work at threshold 0.
  const FeasibleResult singles = feasible(6, 6, 0);
  REQUIRE(singles.status == SearchStatus::found);
  CHECK(singles.witness->max_class_size() == 1);
}

TEST_CASE("feasible reports budget exhaustion distinctly") {
  SearchConfig config;
  config.n = 12;
  config.k = 2;
  config.threshold = 4;
  config.max_nodes = 5;
  const FeasibleResult result = feasible(config);
  CHECK(result.status == SearchStatus::budget_exhausted);
  CHECK(!result.witness.has_value());
  CHECK(result.nodes >= 5);
}

TEST_CASE("feasibility is monotone in the threshold") {
  for (int n = 4; n <= 10; ++n) {
    for (int k = 2; k <= 4; ++k) {
      bool seen_feasible = false;
      for (int threshold = 0; threshold <= phi_upper_bound(n, k) + 1; ++threshold) {
        const bool found = feasible(n, k, threshold).status == SearchStatus::found;
        if (seen_feasible) CHECK(found);
        seen_feasible = seen_feasible || found;
      }
      CHECK(seen_feasible);
    }
  }
}

TEST_CASE("symmetry reduction does not change feasibility") {
  for (int n = 4; n <= 8; ++n) {
    for (int k = 2; k <= 3; ++k) {
      for (int threshold = 0; threshold <= 5; ++threshold) {
        SearchConfig with;
        with.n = n;
        with.k = k;
        with.threshold = threshold;
        SearchConfig without = with;
        without.symmetry = false;
        CHECK(feasible(with).status == feasible(without).status);
      }
    }
  }
}

TEST_CASE("brute force values") {
  const OracleResult six = brute_force_phi(6, 2);
  CHECK(six.outcome == OracleOutcome::ok);
  CHECK(six.value == 3);
  CHECK(evaluate(*six.witness).value == 3);

  CHECK(brute_force_phi(12, 5).value == 3);
  CHECK(brute_force_phi(11, 2).value == 9);
}

TEST_CASE("brute force refuses beyond the cap and the budget") {
  CHECK(brute_force_phi(20, 2).outcome == OracleOutcome::cap_exceeded);
  // Raising the cap admits a larger prime, where the scan starts at the
  // already-feasible lower bound.
  const OracleResult raised = brute_force_phi(19, 2, kDefaultNodeBudget, 19);
  CHECK(raised.outcome == OracleOutcome::ok);
  CHECK(raised.value == 17);
  CHECK(brute_force_phi(14, 2, 10).outcome == OracleOutcome::budget_exhausted);
}

TEST_CASE("witnesses revalidate through the engine") {
  for (int n = 4; n <= 12; ++n) {
    for (int k = 2; k <= n; ++k) {
      const OracleResult result = brute_force_phi(n, k);
      REQUIRE(result.outcome == OracleOutcome::ok);
      CHECK(evaluate(*result.witness).value == result.value);
    }
  }
}

TEST_CASE("oracle agrees with every exact regime, to n = 12") {
  for (int n = 2; n <= 12; ++n) {
    for (int k = 2; k <= n; ++k) {
      const PhiResult formula = phi_exact(n, k);
      if (!formula.exact) continue;
      CHECK(brute_force_phi(n, k).value == *formula.exact);
    }
  }
}

TEST_CASE("enumerate optimal colorings") {
  // Unique optimum for n = k: all singletons.
  const EnumerateResult singles = enumerate_optimal(5, 5);
  CHECK(singles.value == 0);
  REQUIRE(singles.colorings.size() == 1);
  CHECK(singles.colorings[0].max_class_size() == 1);

  // (7,2): value 5; the block halves show up among the optima.
  const EnumerateResult seven = enumerate_optimal(7, 2);
  CHECK(seven.value == 5);
  CHECK(!seven.truncated);
  CHECK(!seven.colorings.empty());
  const std::vector<int> block_assignment{0, 0, 0, 0, 1, 1, 1};
  bool contains_blocks = false;
  for (const Coloring& coloring : seven.colorings) {
    if (coloring.assignment() == block_assignment) contains_blocks = true;
    CHECK(evaluate(coloring).value == 5);
  }
  CHECK(contains_blocks);

  // Canonical form: assignments are restricted-growth strings in
  // lexicographic order, without duplicates.
  std::set<std::vector<int>> seen;
  std::vector<int> previous;
  for (const Coloring& coloring : seven.colorings) {
    const auto& assignment = coloring.assignment();
    int highest = -1;
    for (int label : assignment) {
      CHECK(label <= highest + 1);
      highest = std::max(highest, label);
    }
    CHECK(seen.insert(assignment).second);
    if (!previous.empty()) CHECK(previous < assignment);
    previous = assignment;
  }
}

TEST_CASE("enumeration honors its limit") {
  const EnumerateResult capped = enumerate_optimal(6, 2, 1);
  CHECK(capped.truncated);
  CHECK(capped.colorings.size() == 1);

  const EnumerateResult full = enumerate_optimal(6, 2);
  CHECK(!full.truncated);
  CHECK(full.colorings.size() > 1);
}

TEST_CASE("invalid search arguments are rejected") {
  CHECK_THROWS(feasible(1, 2, 0));
  CHECK_THROWS(feasible(4, 2, -1));
  CHECK_THROWS(feasible(70, 2, 1));
}
