#pragma once

#include <optional>

#include "sumset/coloring.hpp"

namespace sumset {

// Which closed-form regime produced an exact value, if any.
enum class Regime {
  prime,       // prime modulus, k <= n
  interval,    // 2*ceil(n/k) - 3 <= least prime divisor of n
  coset,       // coset-coloring value below the size bound
  gap,         // bounds only
  degenerate,  // k > n: every class can be a singleton or empty
};

const char* regime_name(Regime regime);

struct PhiResult {
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
  Regime regime = Regime::gap;
  // Achieves upper (and exact when present).
  std::optional<Coloring> witness;
  // Gap regime: the losing construction, kept for oracle refinement.
  std::optional<Coloring> secondary_witness;
};

/// max{0, min{p(n), 2*ceil(n/k) - 3}}. Requires n, k >= 2.
int phi_lower_bound(int n, int k);

/// min{max(0, 2*ceil(n/k) - 3), f(n / q(n,k))}. Requires n, k >= 2.
int phi_upper_bound(int n, int k);

/// Regime dispatch, precedence prime > interval > coset, gap otherwise;
/// k > n short-circuits to the degenerate regime with exact 0.
PhiResult phi_exact(int n, int k);

}  // namespace sumset
