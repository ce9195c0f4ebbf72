#include "sumset/verify.hpp"

#include <algorithm>
#include <random>

#include "sumset/arith.hpp"
#include "sumset/mask64.hpp"
#include "sumset/phi.hpp"
#include "sumset/stability.hpp"
#include "sumset/structure.hpp"
#include "sumset/subgroup.hpp"

namespace sumset {

namespace {

constexpr std::size_t kMaxSamples = 8;

void flag(SuiteResult& result, const std::string& message) {
  ++result.violations;
  if (result.samples.size() < kMaxSamples) result.samples.push_back(message);
}

ResidueSet set_from_mask(std::uint64_t mask, int n) {
  ResidueSet out(n);
  while (mask != 0) {
    out.add(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

std::string pair_label(int n, int k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

// Oracle value or a flagged refusal (never a guess).
std::optional<int> oracle_value(SuiteResult& result, int n, int k,
                                std::uint64_t max_nodes) {
  OracleResult oracle = brute_force_phi(n, k, max_nodes, kOracleModulusLimit);
  if (oracle.outcome != OracleOutcome::ok) {
    flag(result, pair_label(n, k) + ": oracle refused (cap or budget)");
    return std::nullopt;
  }
  return oracle.value;
}

}  // namespace

SuiteResult verify_thm1(int pmax, std::uint64_t max_nodes) {
  SuiteResult result;
  result.suite = "thm1";
  for (int p = 2; p <= pmax; ++p) {
    if (!is_prime(p)) continue;
    for (int k = 2; k <= p; ++k) {
      ++result.cases;
      const int expected = std::max(0, 2 * ceil_div(p, k) - 3);
      const auto value = oracle_value(result, p, k, max_nodes);
      if (value && *value != expected) {
        flag(result, pair_label(p, k) + ": oracle " + std::to_string(*value) +
                         " != formula " + std::to_string(expected));
      }
    }
  }
  return result;
}

SuiteResult verify_thm2(int pmax, std::uint64_t max_nodes) {
  SuiteResult result;
  result.suite = "thm2";
  for (int p = 2; p <= pmax; ++p) {
    if (!is_prime(p)) continue;
    for (int k = 2; k <= p; ++k) {
      const int m = ceil_div(p, k);
      if (m < 5 || 2 * m - 3 >= p) continue;
      EnumerateResult enumeration =
          enumerate_optimal(p, k, kDefaultEnumerateLimit, max_nodes,
                            kOracleModulusLimit);
      if (enumeration.outcome != OracleOutcome::ok || enumeration.truncated) {
        flag(result, pair_label(p, k) + ": enumeration incomplete");
        continue;
      }
      if (enumeration.value != 2 * m - 3) {
        flag(result, pair_label(p, k) + ": optimal value " +
                         std::to_string(enumeration.value) + " != " +
                         std::to_string(2 * m - 3));
        continue;
      }
      for (const Coloring& coloring : enumeration.colorings) {
        ++result.cases;
        bool has_extremal_progression = false;
        bool oversized_class = false;
        for (const ResidueSet& cls : coloring.classes()) {
          if (cls.size() > m) oversized_class = true;
          if (cls.size() != m) continue;
          if (restricted_sumset(cls).size() != 2 * m - 3) continue;
          if (arithmetic_progression_step(cls).has_value()) {
            has_extremal_progression = true;
          }
        }
        if (oversized_class) {
          flag(result, pair_label(p, k) + ": optimal coloring has a class above " +
                           std::to_string(m));
        }
        if (!has_extremal_progression) {
          flag(result, pair_label(p, k) +
                           ": optimal coloring lacks an extremal progression class");
        }
      }
    }
  }
  return result;
}

SuiteResult verify_thm3(int nmax, std::uint64_t max_nodes) {
  SuiteResult result;
  result.suite = "thm3";
  for (int n = 2; n <= nmax; ++n) {
    for (int k = 2; k <= n; ++k) {
      ++result.cases;
      const int lower = phi_lower_bound(n, k);
      const int upper = phi_upper_bound(n, k);
      const auto value = oracle_value(result, n, k, max_nodes);
      if (!value) continue;
      if (*value < lower || *value > upper) {
        flag(result, pair_label(n, k) + ": oracle " + std::to_string(*value) +
                         " outside [" + std::to_string(lower) + ", " +
                         std::to_string(upper) + "]");
      }
      if (best_construction(n, k).evaluation.value != upper) {
        flag(result, pair_label(n, k) + ": best construction misses the upper bound");
      }
    }
  }
  return result;
}

SuiteResult verify_thm4(int nmax, std::uint64_t max_nodes) {
  SuiteResult result;
  result.suite = "thm4";
  for (int n = 2; n <= nmax; ++n) {
    for (int k = 2; k <= n; ++k) {
      const GroupParams params = group_params(n, k);
      const int m = params.top_class_size;
      if (2 * m - 3 > params.least_prime) continue;
      ++result.cases;
      const int expected = std::max(0, 2 * m - 3);
      const auto value = oracle_value(result, n, k, max_nodes);
      if (value && *value != expected) {
        flag(result, pair_label(n, k) + ": oracle " + std::to_string(*value) +
                         " != interval formula " + std::to_string(expected));
      }
    }
  }
  return result;
}

SuiteResult verify_thm5(int nmax, std::uint64_t max_nodes) {
  SuiteResult result;
  result.suite = "thm5";
  for (int n = 2; n <= nmax; ++n) {
    for (int k = 2; k <= n; ++k) {
      const GroupParams params = group_params(n, k);
      const int coset_value = coset_sumset_size(n / params.largest_divisor);
      if (coset_value >
          std::min(params.least_prime, 2 * params.top_class_size - 3)) {
        continue;
      }
      ++result.cases;
      const auto value = oracle_value(result, n, k, max_nodes);
      if (value && *value != coset_value) {
        flag(result, pair_label(n, k) + ": oracle " + std::to_string(*value) +
                         " != coset formula " + std::to_string(coset_value));
      }
    }
  }
  return result;
}

SuiteResult verify_thm6(int nmax) {
  SuiteResult result;
  result.suite = "thm6";
  for (int n = 2; n <= std::min(nmax, 24); ++n) {
    for (int t : divisors(n)) {
      if (t < 3) continue;
      const SubgroupContext ctx = subgroup_of_size(n, t);
      for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        ++result.cases;
        const ResidueSet a = set_from_mask(mask, n);
        try {
          const StabilityReport report = combined_bound(a, ctx);
          if (report.sumset_size < report.cross_bound ||
              report.sumset_size < report.internal_bound) {
            flag(result, "n=" + std::to_string(n) + " t=" + std::to_string(t) +
                             " A=" + a.to_string() + ": bound above actual");
          }
        } catch (const std::exception& e) {
          flag(result, "n=" + std::to_string(n) + " t=" + std::to_string(t) +
                           " A=" + a.to_string() + ": " + e.what());
        }
      }
    }
  }
  return result;
}

SuiteResult verify_thm7(int nmax, int smax) {
  SuiteResult result;
  result.suite = "thm7";
  for (int n = 2; n <= std::min(nmax, 24); ++n) {
    for (int t : divisors(n)) {
      if (t < 3) continue;
      const SubgroupContext ctx = subgroup_of_size(n, t);
      const int least_prime = least_prime_divisor(t);
      for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        const ResidueSet a = set_from_mask(mask, n);
        const QuotientStats stats = quotient_stats(a, ctx);
        const int sum_size = restricted_sumset(a).size();
        for (int s = 0; s <= smax; ++s) {
          ++result.cases;
          // Contrapositive: under the concentration hypotheses a spread
          // set must have a large sumset.
          const bool hypotheses = 2 * stats.heaviest_size - 3 <= least_prime &&
                                  3 * stats.heaviest_size > t + s + 3 &&
                                  stats.occupied >= 2;
          if (hypotheses && sum_size <= t + s) {
            flag(result, "n=" + std::to_string(n) + " t=" + std::to_string(t) +
                             " s=" + std::to_string(s) + " A=" + a.to_string() +
                             ": spread set with small sumset");
          }
          try {
            threshold_check(a, ctx, s);
          } catch (const std::exception& e) {
            flag(result, "n=" + std::to_string(n) + " t=" + std::to_string(t) +
                             " s=" + std::to_string(s) + " A=" + a.to_string() +
                             ": " + e.what());
          }
        }
      }
    }
  }
  return result;
}

SuiteResult verify_lemma_block(int nmax) {
  SuiteResult result;
  result.suite = "lemma-block";
  for (int n = 2; n <= nmax; ++n) {
    for (int t = 0; t <= n; ++t) {
      for (int s = 0; s + t <= n; ++s) {
        ++result.cases;
        ResidueSet block(n);
        for (int i = 0; i < t; ++i) block.add(s + i);
        const int actual = restricted_sumset(block).size();
        const int integer_count = std::max(0, 2 * t - 3);
        const bool equality = actual == integer_count;
        if (actual > integer_count) {
          flag(result, "n=" + std::to_string(n) + " block size " +
                           std::to_string(t) + ": sumset exceeds the integer count");
        }
        if (equality != (2 * t - 3 <= n)) {
          flag(result, "n=" + std::to_string(n) + " block size " +
                           std::to_string(t) + " at " + std::to_string(s) +
                           ": equality iff condition failed");
        }
      }
    }
  }
  return result;
}

SuiteResult verify_lemma_coset(int nmax) {
  SuiteResult result;
  result.suite = "lemma-coset";
  std::mt19937_64 rng(0x5e7c0de);
  for (int n = 2; n <= nmax; ++n) {
    for (int t : divisors(n)) {
      const SubgroupContext ctx = subgroup_of_size(n, t);
      for (int rep = 0; rep < ctx.index; ++rep) {
        const ResidueSet& coset = ctx.cosets[rep];
        ++result.cases;
        if (restricted_sumset(coset).size() != coset_sumset_size(t)) {
          flag(result, "n=" + std::to_string(n) + " t=" + std::to_string(t) +
                           " coset " + std::to_string(rep) +
                           ": sumset size is not f(t)");
        }
        // Subsets stay inside the doubled coset: exhaustive for small
        // subgroups, sampled beyond.
        const ResidueSet doubled = ctx.cosets[(2 * rep) % ctx.index];
        const auto members = coset.members();
        const auto check_subset = [&](std::uint64_t pick) {
          ++result.cases;
          ResidueSet subset(n);
          for (int j = 0; j < t; ++j) {
            if ((pick >> j) & 1) subset.add(members[j]);
          }
          if (!restricted_sumset(subset).is_subset_of(doubled)) {
            flag(result, "n=" + std::to_string(n) + " t=" + std::to_string(t) +
                             " B=" + subset.to_string() +
                             ": sums escape the doubled coset");
          }
        };
        if (t <= 12) {
          for (std::uint64_t pick = 0; pick < (1ULL << t); ++pick) check_subset(pick);
        } else {
          for (int trial = 0; trial < 128; ++trial) {
            check_subset(rng() & mask64::all(t));
          }
        }
      }
    }
  }
  return result;
}

SuiteResult verify_lemma_lower(int nmax) {
  SuiteResult result;
  result.suite = "lemma-lower";
  for (int n = 2; n <= std::min(nmax, 24); ++n) {
    const int least_prime = least_prime_divisor(n);
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      const int size = mask64::popcount(mask);
      if (size < 2) continue;
      ++result.cases;
      const int actual = mask64::popcount(mask64::restricted_sumset(mask, n));
      if (actual < std::min(least_prime, 2 * size - 3)) {
        flag(result, "n=" + std::to_string(n) + " A=" +
                         set_from_mask(mask, n).to_string() +
                         ": sumset below the size bound");
      }
    }
  }
  return result;
}

SuiteResult verify_lemma_window(int nmax) {
  SuiteResult result;
  result.suite = "lemma-window";
  for (int n = 2; n <= nmax; ++n) {
    const int least_prime = least_prime_divisor(n);
    for (int width = 1; width <= least_prime; ++width) {
      for (int start = 0; start < n; ++start) {
        ++result.cases;
        std::vector<long long> window(width);
        for (int i = 0; i < width; ++i) window[i] = start + i;
        try {
          if (!lift_and_check_window(window, n)) {
            flag(result, "n=" + std::to_string(n) + " window at " +
                             std::to_string(start) + " width " +
                             std::to_string(width) + ": guarantee not recognized");
          }
        } catch (const std::exception& e) {
          flag(result, "n=" + std::to_string(n) + " window at " +
                           std::to_string(start) + ": " + e.what());
        }
      }
    }
    // A window as wide as the modulus must be declined.
    ++result.cases;
    std::vector<long long> wide(n + 1);
    for (int i = 0; i <= n; ++i) wide[i] = i;
    if (lift_and_check_window(wide, n)) {
      flag(result, "n=" + std::to_string(n) + ": oversized window accepted");
    }
  }
  return result;
}

SuiteResult verify_lemma_cross(int nmax) {
  SuiteResult result;
  result.suite = "lemma-cross";
  for (int n = 2; n <= nmax; ++n) {
    for (int t : divisors(n)) {
      const SubgroupContext ctx = subgroup_of_size(n, t);
      for (int c = 0; c < ctx.index; ++c) {
        std::vector<bool> image_seen(ctx.index, false);
        for (int d = 0; d < ctx.index; ++d) {
          ++result.cases;
          // Elementwise coset sum, then locate it among the cosets.
          ResidueSet sums(n);
          for (int x : ctx.cosets[d].members()) {
            for (int y : ctx.cosets[c].members()) sums.add((x + y) % n);
          }
          const int image = (d + c) % ctx.index;
          if (!(sums == ctx.cosets[image])) {
            flag(result, "n=" + std::to_string(n) + " t=" + std::to_string(t) +
                             ": coset sum lands outside the expected coset");
            continue;
          }
          if (image_seen[image]) {
            flag(result, "n=" + std::to_string(n) + " t=" + std::to_string(t) +
                             ": translation map is not injective");
          }
          image_seen[image] = true;
        }
        if (std::find(image_seen.begin(), image_seen.end(), false) !=
            image_seen.end()) {
          flag(result, "n=" + std::to_string(n) + " t=" + std::to_string(t) +
                           ": translation map is not onto");
        }
      }
    }
  }
  return result;
}

SuiteResult verify_remark44() {
  SuiteResult result;
  result.suite = "remark44";
  // s tied cosets of size x, odd coset count, subgroup large enough that
  // no prime capping occurs; the two bounds must differ by (s-1)(x-3).
  for (int x : {3, 4, 5}) {
    for (int s : {2, 3}) {
      const int t = x == 3 ? 3 : (x == 4 ? 5 : 7);  // least prime >= 2x-3
      const int q = 3;                              // odd coset count >= s
      const int n = q * t;
      const SubgroupContext ctx = subgroup_of_size(n, t);
      ResidueSet a(n);
      for (int coset = 0; coset < s; ++coset) {
        const auto members = ctx.cosets[coset].members();
        for (int i = 0; i < x; ++i) a.add(members[i]);
      }
      ++result.cases;
      const StabilityReport report = combined_bound(a, ctx);
      const int expected_internal = s * (2 * x - 3);
      const int expected_cross = (2 * x - 3) + (s - 1) * x;
      const std::string label =
          "x=" + std::to_string(x) + " s=" + std::to_string(s);
      if (report.internal_bound != expected_internal) {
        flag(result, label + ": internal bound " +
                         std::to_string(report.internal_bound) + " != " +
                         std::to_string(expected_internal));
      }
      if (report.cross_bound != expected_cross) {
        flag(result, label + ": cross bound " +
                         std::to_string(report.cross_bound) + " != " +
                         std::to_string(expected_cross));
      }
      if (report.internal_bound - report.cross_bound != (s - 1) * (x - 3)) {
        flag(result, label + ": advantage is not (s-1)(x-3)");
      }
      if (report.tie_count != s || report.heaviest_size != x) {
        flag(result, label + ": constructed instance is not the tied configuration");
      }
    }
  }
  return result;
}

SuiteResult verify_threeset(int exhaustive_nmax, int nmax) {
  SuiteResult result;
  result.suite = "threeset";
  const auto check = [&](int n, int a, int b, int c) {
    ++result.cases;
    const std::uint64_t mask = mask64::bit(a) | mask64::bit(b) | mask64::bit(c);
    if (mask64::popcount(mask64::restricted_sumset(mask, n)) != 3) {
      flag(result, "n=" + std::to_string(n) + " A={" + std::to_string(a) + "," +
                       std::to_string(b) + "," + std::to_string(c) +
                       "}: three pairwise sums are not distinct");
    }
  };
  for (int n = 3; n <= std::min(exhaustive_nmax, nmax); ++n) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        for (int c = b + 1; c < n; ++c) check(n, a, b, c);
      }
    }
  }
  std::mt19937_64 rng(0x3e7);
  for (int n = std::max(3, exhaustive_nmax + 1); n <= nmax; ++n) {
    for (int trial = 0; trial < 2000; ++trial) {
      int a = static_cast<int>(rng() % n);
      int b = static_cast<int>(rng() % n);
      int c = static_cast<int>(rng() % n);
      if (a == b || b == c || a == c) continue;
      check(n, a, b, c);
    }
  }
  return result;
}

SuiteResult run_suite(const std::string& name, int nmax, int pmax, int smax,
                      std::uint64_t max_nodes) {
  if (name == "thm1") return verify_thm1(pmax, max_nodes);
  if (name == "thm2") return verify_thm2(pmax, max_nodes);
  if (name == "thm3") return verify_thm3(nmax, max_nodes);
  if (name == "thm4") return verify_thm4(nmax, max_nodes);
  if (name == "thm5") return verify_thm5(nmax, max_nodes);
  if (name == "thm6") return verify_thm6(nmax);
  if (name == "thm7") return verify_thm7(nmax, smax);
  if (name == "lemma-block") return verify_lemma_block(nmax);
  if (name == "lemma-coset") return verify_lemma_coset(nmax);
  if (name == "lemma-lower") return verify_lemma_lower(nmax);
  if (name == "lemma-window") return verify_lemma_window(nmax);
  if (name == "lemma-cross") return verify_lemma_cross(nmax);
  if (name == "remark44") return verify_remark44();
  if (name == "threeset") return verify_threeset(20, nmax);
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

std::vector<std::string> suite_names() {
  return {"thm1",        "thm2",        "thm3",         "thm4",
          "thm5",        "thm6",        "thm7",         "lemma-block",
          "lemma-coset", "lemma-lower", "lemma-window", "lemma-cross",
          "remark44",    "threeset"};
}

}  // namespace sumset
