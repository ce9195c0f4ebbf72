#include "sumset/stability.hpp"

#include <algorithm>
#include <stdexcept>

#include "sumset/arith.hpp"

namespace sumset {

namespace {

void check_subgroup(const ResidueSet& a, const SubgroupContext& h) {
  if (a.modulus() != h.n) {
    throw std::invalid_argument("stability: modulus mismatch");
  }
  if (h.size < 3) {
    throw std::invalid_argument(
        "stability: subgroup size must be >= 3 (sizes 1 and 2 carry only "
        "the coset sumset values 0 and 1)");
  }
}

int per_coset_term(int least_prime, int hit) {
  return std::max(0, std::min(least_prime, 2 * hit - 3));
}

}  // namespace

int within_coset_bound(int subgroup_size, int heaviest_size) {
  if (subgroup_size < 3) {
    throw std::invalid_argument("within_coset_bound: need subgroup size >= 3");
  }
  if (heaviest_size < 0) {
    throw std::invalid_argument("within_coset_bound: need heaviest size >= 0");
  }
  return per_coset_term(least_prime_divisor(subgroup_size), heaviest_size);
}

StabilityReport cross_coset_bound(const ResidueSet& a, const SubgroupContext& h) {
  check_subgroup(a, h);
  StabilityReport report;
  report.subgroup_size = h.size;
  report.subgroup_least_prime = least_prime_divisor(h.size);

  const QuotientStats stats = quotient_stats(a, h);
  report.heaviest_size = stats.heaviest_size;
  report.other_occupied = std::max(0, stats.occupied - 1);
  for (int i = 0; i < h.index; ++i) {
    if (a.intersect(h.cosets[i]).size() == stats.heaviest_size &&
        stats.heaviest_size > 0) {
      ++report.tie_count;
    }
  }
  report.within_coset_bound =
      per_coset_term(report.subgroup_least_prime, report.heaviest_size);
  report.cross_bound =
      report.within_coset_bound + report.other_occupied * report.heaviest_size;
  report.sumset_size = restricted_sumset(a).size();
  if (report.sumset_size < report.cross_bound) {
    throw std::logic_error("cross_coset_bound: heaviest-coset inequality failed");
  }
  report.cross_tight = report.sumset_size == report.cross_bound;
  return report;
}

int internal_sums_bound(const ResidueSet& a, const SubgroupContext& h) {
  check_subgroup(a, h);
  const int least_prime = least_prime_divisor(h.size);
  // Group cosets by their double 2C; within each fiber only the largest
  // contribution is guaranteed disjoint from the others.
  std::vector<int> best_per_double(h.index, 0);
  for (int i = 0; i < h.index; ++i) {
    const int hit = a.intersect(h.cosets[i]).size();
    if (hit < 2) continue;
    const int doubled = (2 * i) % h.index;
    best_per_double[doubled] =
        std::max(best_per_double[doubled], per_coset_term(least_prime, hit));
  }
  int total = 0;
  for (int term : best_per_double) total += term;
  return total;
}

StabilityReport combined_bound(const ResidueSet& a, const SubgroupContext& h) {
  StabilityReport report = cross_coset_bound(a, h);
  report.internal_bound = internal_sums_bound(a, h);
  report.combined_bound = std::max(report.cross_bound, report.internal_bound);
  if (report.sumset_size < report.internal_bound) {
    throw std::logic_error("combined_bound: internal-sums bound failed");
  }
  report.internal_tight = report.sumset_size == report.internal_bound;
  report.combined_tight = report.sumset_size == report.combined_bound;
  return report;
}

StabilityReport threshold_check(const ResidueSet& a, const SubgroupContext& h,
                                int slack) {
  if (slack < 0) throw std::invalid_argument("threshold_check: need slack >= 0");
  StabilityReport report = combined_bound(a, h);
  report.slack = slack;
  const int budget = h.size + slack;
  if (report.sumset_size > budget) {
    // Premise fails; the theorem says nothing about this set.
    report.threshold_applicable = false;
    return report;
  }
  report.threshold_applicable = true;
  if (report.heaviest_size > 0) {
    report.other_occupied_cap =
        static_cast<double>(budget - report.within_coset_bound) /
        report.heaviest_size;
    if (report.other_occupied * report.heaviest_size >
        budget - report.within_coset_bound) {
      throw std::logic_error("threshold_check: occupied-coset cap failed");
    }
  }
  const bool forces_concentration =
      2 * report.heaviest_size - 3 <= report.subgroup_least_prime &&
      3 * report.heaviest_size > budget + 3;
  if (forces_concentration) {
    report.concentrated = true;
    if (report.other_occupied != 0) {
      throw std::logic_error("threshold_check: concentration conclusion failed");
    }
  }
  return report;
}

}  // namespace sumset
