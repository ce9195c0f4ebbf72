#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sumset/oracle.hpp"

namespace sumset {

// Outcome of one exhaustive verification sweep.
struct SuiteResult {
  std::string suite;
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> samples;  // first few violation descriptions

  bool ok() const { return violations == 0; }
};

// Each sweep checks one statement over its full desk-scale range and
// counts violations; zero is the only acceptable count.

/// Prime minimax formula vs. exhaustive oracle, all primes p <= pmax,
/// 2 <= k <= p.
SuiteResult verify_thm1(int pmax, std::uint64_t max_nodes = kDefaultNodeBudget);

/// Optimal-coloring structure at prime p <= pmax where the hypotheses
/// (top class size >= 5, 2m-3 < p) hold: every optimal coloring contains
/// a top-size class with extremal sumset that is an arithmetic
/// progression, and no class exceeds the top size.
SuiteResult verify_thm2(int pmax, std::uint64_t max_nodes = kDefaultNodeBudget);

/// Bound sandwich and attainment: lower <= oracle <= upper and the best
/// construction meets the upper bound, all 2 <= k <= n <= nmax.
SuiteResult verify_thm3(int nmax, std::uint64_t max_nodes = kDefaultNodeBudget);

/// Interval-regime exactness vs. oracle on its hypothesis set.
SuiteResult verify_thm4(int nmax, std::uint64_t max_nodes = kDefaultNodeBudget);

/// Coset-regime exactness vs. oracle on its hypothesis set.
SuiteResult verify_thm5(int nmax, std::uint64_t max_nodes = kDefaultNodeBudget);

/// Heaviest-coset inequality and the internal-sums bound for every
/// n <= nmax, subgroup of size >= 3, and subset of Z_n.
SuiteResult verify_thm6(int nmax);

/// Concentration threshold in contrapositive form, slack 0..smax.
SuiteResult verify_thm7(int nmax, int smax);

/// Block sumset law: size max{0, 2t-3} with equality iff 2t-3 <= n, all
/// blocks of all sizes, n <= nmax.
SuiteResult verify_lemma_block(int nmax);

/// Coset sumset law: every coset of a size-t subgroup has sumset size
/// f(t), all n <= nmax and t | n.
SuiteResult verify_lemma_coset(int nmax);

/// Erdos-Heilbronn-type lower bound min{p(n), 2|A|-3}, exhaustive over
/// all A with n <= nmax.
SuiteResult verify_lemma_lower(int nmax);

/// Injectivity of reduction mod n on integer windows narrower than the
/// least prime divisor, all n <= nmax and all window positions.
SuiteResult verify_lemma_window(int nmax);

/// Coset translation bijection: D -> D + C permutes the cosets, all
/// subgroups of all n <= nmax, verified elementwise.
SuiteResult verify_lemma_cross(int nmax);

/// Internal-vs-cross bound gap equals (s-1)(x-3) on constructed
/// instances with s tied cosets of size x, odd coset count, no capping;
/// x in {3,4,5}, s in {2,3}.
SuiteResult verify_remark44();

/// Every 3-element subset has exactly 3 restricted sums; exhaustive for
/// n <= exhaustive_nmax, random samples up to nmax.
SuiteResult verify_threeset(int exhaustive_nmax = 20, int nmax = 64);

/// Dispatch by CLI suite name (thm1..thm7, lemma-block, lemma-coset,
/// lemma-lower, lemma-window, lemma-cross, remark44, threeset).
/// Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, int nmax, int pmax, int smax,
                      std::uint64_t max_nodes);

std::vector<std::string> suite_names();

}  // namespace sumset
