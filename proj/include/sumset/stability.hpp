#pragma once

#include <optional>

#include "sumset/residue_set.hpp"
#include "sumset/subgroup.hpp"

namespace sumset {

// Everything the coset-concentration bounds say about one (A, H) pair.
// The heaviest coset maximizes |A ∩ C| (ties: smallest representative);
// cross_bound counts its internal sums plus one translate per other
// occupied coset, internal_bound sums per-coset contributions grouped by
// doubled coset. Both are lower bounds on the actual sumset size.
struct StabilityReport {
  int subgroup_size = 0;         // t >= 3
  int subgroup_least_prime = 0;  // least prime divisor of t
  int heaviest_size = 0;         // largest |A ∩ C| over cosets C
  int tie_count = 0;             // cosets attaining heaviest_size
  int other_occupied = 0;        // occupied cosets besides the heaviest
  int within_coset_bound = 0;    // max{0, min{p(t), 2*heaviest_size - 3}}
  int cross_bound = 0;           // within_coset_bound + other_occupied * heaviest_size
  int internal_bound = 0;
  int combined_bound = 0;        // max of the two
  int sumset_size = 0;           // actual |A ^+ A|
  bool cross_tight = false;      // sumset_size == cross_bound
  bool internal_tight = false;
  bool combined_tight = false;

  // Threshold analysis, present only for threshold_check.
  std::optional<int> slack;                  // s in |A^+A| <= t+s
  std::optional<bool> threshold_applicable;  // premise |A^+A| <= t+s held
  std::optional<double> other_occupied_cap;  // (t+s-within)/heaviest_size
  std::optional<bool> concentrated;          // forced into a single coset
};

/// max{0, min{p(t), 2x - 3}} for subgroup size t and heaviest
/// intersection x. Requires t >= 3, x >= 0.
int within_coset_bound(int subgroup_size, int heaviest_size);

/// Heaviest-coset inequality: fills the cross side of the report and the
/// actual sumset size. Requires |H| >= 3 (subgroups of size 1 or 2 carry
/// no claim here). Throws std::logic_error if the bound fails.
StabilityReport cross_coset_bound(const ResidueSet& a, const SubgroupContext& h);

/// Sum over doubled cosets E of the largest per-coset contribution
/// max{0, min{p(t), 2|A ∩ C| - 3}} among cosets C with 2C = E.
/// Requires |H| >= 3.
int internal_sums_bound(const ResidueSet& a, const SubgroupContext& h);

/// Full report with both bounds, their max, and tightness flags.
StabilityReport combined_bound(const ResidueSet& a, const SubgroupContext& h);

/// Threshold analysis at |A ^+ A| <= t + slack: bounds the number of
/// occupied cosets besides the heaviest, and detects forced
/// concentration in a single coset. Requires |H| >= 3, slack >= 0.
StabilityReport threshold_check(const ResidueSet& a, const SubgroupContext& h,
                                int slack);

}  // namespace sumset
