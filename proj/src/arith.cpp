#include "sumset/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumset {

bool is_prime(long long v) {
  if (v < 2) return false;
  for (long long d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

int least_prime_divisor(long long r) {
  if (r < 2) throw std::invalid_argument("least_prime_divisor: need r >= 2");
  for (long long d = 2; d * d <= r; ++d) {
    if (r % d == 0) return static_cast<int>(d);
  }
  return static_cast<int>(r);  // r itself is prime
}

int largest_divisor_at_most(int n, int k) {
  if (n < 2 || k < 2) {
    throw std::invalid_argument("largest_divisor_at_most: need n, k >= 2");
  }
  for (int d = std::min(n, k); d >= 2; --d) {
    if (n % d == 0) return d;
  }
  return 1;
}

int coset_sumset_size(int t) {
  if (t < 1) throw std::invalid_argument("coset_sumset_size: need t >= 1");
  if (t == 1) return 0;
  if (t == 2) return 1;
  return t;
}

std::vector<int> divisors(int n) {
  std::vector<int> low, high;
  for (int d = 1; static_cast<long long>(d) * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

int ceil_div(int n, int k) { return (n + k - 1) / k; }

GroupParams group_params(int n, int k) {
  if (n < 2 || k < 2) throw std::invalid_argument("group_params: need n, k >= 2");
  if (n > (1 << 20)) throw std::invalid_argument("group_params: modulus above 2^20");
  return GroupParams{
      .modulus = n,
      .colors = k,
      .top_class_size = ceil_div(n, k),
      .least_prime = least_prime_divisor(n),
      .largest_divisor = largest_divisor_at_most(n, k),
  };
}

}  // namespace sumset
