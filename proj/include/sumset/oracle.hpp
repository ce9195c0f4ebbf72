#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sumset/coloring.hpp"

namespace sumset {

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000ULL;
inline constexpr std::size_t kDefaultEnumerateLimit = 1u << 20;
inline constexpr int kDefaultOracleCap = 18;
// Structural ceiling of the single-word search engine.
inline constexpr int kOracleModulusLimit = 64;

struct SearchConfig {
  int n = 0;
  int k = 0;
  int threshold = 0;
  std::uint64_t max_nodes = kDefaultNodeBudget;
  bool symmetry = true;  // canonical first-touch class labels
  std::size_t enumerate_limit = kDefaultEnumerateLimit;
};

enum class SearchStatus {
  found,
  infeasible,
  budget_exhausted,  // distinct from infeasible: nothing is claimed
};

struct FeasibleResult {
  SearchStatus status = SearchStatus::infeasible;
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;
};

/// Depth-first search for a k-coloring whose every class has restricted
/// self-sumset size <= threshold. Residues are assigned in order
/// 0..n-1; with symmetry on, class labels appear in first-touch order so
/// each set partition is visited once. Deterministic.
FeasibleResult feasible(const SearchConfig& config);
FeasibleResult feasible(int n, int k, int threshold);

enum class OracleOutcome { ok, cap_exceeded, budget_exhausted };

struct OracleResult {
  OracleOutcome outcome = OracleOutcome::ok;
  int value = 0;
  std::optional<Coloring> witness;
  std::uint64_t nodes = 0;
};

/// Exact minimax value by ascending threshold scan from the closed-form
/// lower bound. Refuses n > cap outright (no approximation); the witness
/// is re-evaluated through the engine before being returned.
OracleResult brute_force_phi(int n, int k,
                             std::uint64_t max_nodes = kDefaultNodeBudget,
                             int cap = kDefaultOracleCap);

struct EnumerateResult {
  OracleOutcome outcome = OracleOutcome::ok;
  int value = 0;
  std::vector<Coloring> colorings;  // canonical label order, sorted
  bool truncated = false;           // hit the limit; count = colorings.size()
  std::uint64_t nodes = 0;
};

/// All colorings attaining the exact minimax value, in canonical
/// (first-touch label) form, lexicographic by assignment, up to limit.
EnumerateResult enumerate_optimal(int n, int k,
                                  std::size_t limit = kDefaultEnumerateLimit,
                                  std::uint64_t max_nodes = kDefaultNodeBudget,
                                  int cap = kDefaultOracleCap);

}  // namespace sumset
