#include "sumset/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "sumset/arith.hpp"
#include "sumset/mask64.hpp"
#include "sumset/phi.hpp"

namespace sumset {

namespace {

// Depth-first assignment of residues 0..n-1 to class labels with
// incremental per-class sumset masks. Adding residue r to a class with
// member mask M contributes exactly the sums {m + r : m in M}, so the
// class sumset mask grows by rot(M, r); monotonicity makes pruning at
// the threshold sound.
class Searcher {
 public:
  Searcher(const SearchConfig& config)
      : n_(config.n),
        k_(config.k),
        threshold_(config.threshold),
        symmetry_(config.symmetry),
        max_nodes_(config.max_nodes),
        assignment_(config.n, 0),
        class_mask_(config.k, 0),
        sum_mask_(config.k, 0) {}

  // on_complete(assignment, used_labels) -> true to stop the search.
  template <typename OnComplete>
  void run(OnComplete&& on_complete) {
    dfs(0, 0, on_complete);
  }

  std::uint64_t nodes() const { return nodes_; }
  bool budget_hit() const { return budget_hit_; }

 private:
  template <typename OnComplete>
  bool dfs(int r, int used, OnComplete& on_complete) {
    if (r == n_) return on_complete(assignment_, used);
    const int limit = symmetry_ ? std::min(k_, used + 1) : k_;
    for (int c = 0; c < limit; ++c) {
      if (++nodes_ > max_nodes_) {
        budget_hit_ = true;
        return true;
      }
      const std::uint64_t added = mask64::rot(class_mask_[c], r, n_);
      const std::uint64_t grown = sum_mask_[c] | added;
      if (mask64::popcount(grown) > threshold_) continue;
      const std::uint64_t saved = sum_mask_[c];
      sum_mask_[c] = grown;
      class_mask_[c] |= mask64::bit(r);
      assignment_[r] = c;
      const bool stop = dfs(r + 1, std::max(used, c + 1), on_complete);
      class_mask_[c] &= ~mask64::bit(r);
      sum_mask_[c] = saved;
      if (stop) return true;
    }
    return false;
  }

  int n_, k_, threshold_;
  bool symmetry_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
  std::vector<int> assignment_;
  std::vector<std::uint64_t> class_mask_;
  std::vector<std::uint64_t> sum_mask_;
};

void check_search_args(int n, int k, int threshold) {
  if (n < 2 || k < 2) throw std::invalid_argument("oracle: need n, k >= 2");
  if (threshold < 0) throw std::invalid_argument("oracle: need threshold >= 0");
  if (n > kOracleModulusLimit) {
    throw std::invalid_argument("oracle: modulus beyond the search engine limit of " +
                                std::to_string(kOracleModulusLimit));
  }
}

}  // namespace

FeasibleResult feasible(const SearchConfig& config) {
  check_search_args(config.n, config.k, config.threshold);
  Searcher searcher(config);
  FeasibleResult result;
  searcher.run([&](const std::vector<int>& assignment, int) {
    result.witness = Coloring(config.n, config.k, assignment);
    return true;
  });
  result.nodes = searcher.nodes();
  if (searcher.budget_hit()) {
    result.status = SearchStatus::budget_exhausted;
    result.witness.reset();
  } else if (result.witness) {
    result.status = SearchStatus::found;
    // Re-check through the sumset engine rather than trusting the
    // incremental masks.
    if (evaluate(*result.witness).value > config.threshold) {
      throw std::logic_error("feasible: witness fails re-evaluation");
    }
  } else {
    result.status = SearchStatus::infeasible;
  }
  return result;
}

FeasibleResult feasible(int n, int k, int threshold) {
  SearchConfig config;
  config.n = n;
  config.k = k;
  config.threshold = threshold;
  return feasible(config);
}

OracleResult brute_force_phi(int n, int k, std::uint64_t max_nodes, int cap) {
  if (n < 2 || k < 2) throw std::invalid_argument("brute_force_phi: need n, k >= 2");
  OracleResult result;
  if (n > std::min(cap, kOracleModulusLimit)) {
    result.outcome = OracleOutcome::cap_exceeded;
    return result;
  }
  const int ceiling = phi_upper_bound(n, k);
  std::uint64_t remaining = max_nodes;
  for (int threshold = phi_lower_bound(n, k); threshold <= ceiling; ++threshold) {
    SearchConfig config;
    config.n = n;
    config.k = k;
    config.threshold = threshold;
    config.max_nodes = remaining;
    FeasibleResult attempt = feasible(config);
    result.nodes += attempt.nodes;
    if (attempt.status == SearchStatus::budget_exhausted) {
      result.outcome = OracleOutcome::budget_exhausted;
      return result;
    }
    remaining -= attempt.nodes;
    if (attempt.status == SearchStatus::found) {
      result.value = threshold;
      result.witness = std::move(attempt.witness);
      if (evaluate(*result.witness).value != threshold) {
        throw std::logic_error("brute_force_phi: witness value drifted");
      }
      return result;
    }
  }
  // The block construction always meets the upper bound, so the scan
  // cannot fall through.
  throw std::logic_error("brute_force_phi: no threshold up to the upper bound worked");
}

EnumerateResult enumerate_optimal(int n, int k, std::size_t limit,
                                  std::uint64_t max_nodes, int cap) {
  OracleResult base = brute_force_phi(n, k, max_nodes, cap);
  EnumerateResult result;
  result.outcome = base.outcome;
  result.nodes = base.nodes;
  if (base.outcome != OracleOutcome::ok) return result;
  result.value = base.value;

  SearchConfig config;
  config.n = n;
  config.k = k;
  config.threshold = base.value;
  config.max_nodes = max_nodes;
  Searcher searcher(config);
  searcher.run([&](const std::vector<int>& assignment, int) {
    if (result.colorings.size() == limit) {
      result.truncated = true;
      return true;
    }
    result.colorings.emplace_back(n, k, assignment);
    return false;
  });
  result.nodes += searcher.nodes();
  if (searcher.budget_hit()) {
    result.outcome = OracleOutcome::budget_exhausted;
    result.colorings.clear();
    result.truncated = false;
    return result;
  }
  // Depth-first order with ascending labels is already lexicographic in
  // the assignment string.
  for (const Coloring& coloring : result.colorings) {
    if (evaluate(coloring).value != result.value) {
      throw std::logic_error("enumerate_optimal: non-optimal coloring captured");
    }
  }
  return result;
}

}  // namespace sumset
