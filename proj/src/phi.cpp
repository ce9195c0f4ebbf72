#include "sumset/phi.hpp"

#include <algorithm>
#include <stdexcept>

#include "sumset/arith.hpp"

namespace sumset {

const char* regime_name(Regime regime) {
  switch (regime) {
    case Regime::prime: return "prime";
    case Regime::interval: return "interval";
    case Regime::coset: return "coset";
    case Regime::gap: return "gap";
    case Regime::degenerate: return "degenerate";
  }
  return "?";
}

int phi_lower_bound(int n, int k) {
  const GroupParams params = group_params(n, k);
  const int size_term = 2 * params.top_class_size - 3;
  return std::max(0, std::min(params.least_prime, size_term));
}

int phi_upper_bound(int n, int k) {
  const GroupParams params = group_params(n, k);
  const int block_value = std::max(0, 2 * params.top_class_size - 3);
  const int coset_value = coset_sumset_size(n / params.largest_divisor);
  return std::min(block_value, coset_value);
}

PhiResult phi_exact(int n, int k) {
  const GroupParams params = group_params(n, k);
  PhiResult result;
  result.lower = phi_lower_bound(n, k);
  result.upper = phi_upper_bound(n, k);

  if (k > n) {
    // Every residue gets its own color and the rest stay empty.
    result.regime = Regime::degenerate;
    result.exact = 0;
    result.witness = block_partition(n, k);
    return result;
  }

  const int m = params.top_class_size;
  const int block_value = std::max(0, 2 * m - 3);
  const int coset_value = coset_sumset_size(n / params.largest_divisor);

  if (is_prime(n)) {
    result.regime = Regime::prime;
    result.exact = block_value;
    result.witness = block_partition(n, k);
  } else if (2 * m - 3 <= params.least_prime) {
    result.regime = Regime::interval;
    result.exact = block_value;
    result.witness = block_partition(n, k);
  } else if (coset_value <= std::min(params.least_prime, 2 * m - 3)) {
    result.regime = Regime::coset;
    result.exact = coset_value;
    result.witness = coset_partition(n, k);
  } else {
    result.regime = Regime::gap;
    Construction best = best_construction(n, k);
    const ConstructionMethod winner = best.method;
    result.witness = std::move(best.coloring);
    result.secondary_witness = winner == ConstructionMethod::block
                                   ? coset_partition(n, k)
                                   : block_partition(n, k);
  }

  if (result.exact && (*result.exact != result.lower || *result.exact != result.upper)) {
    throw std::logic_error("phi_exact: exact value must pinch the bounds");
  }
  return result;
}

}  // namespace sumset
