#pragma once

#include <vector>

namespace sumset {

/// Trial-division primality; v < 2 is not prime.
bool is_prime(long long v);

/// Smallest prime p dividing r. Requires r >= 2.
int least_prime_divisor(long long r);

/// Largest d with d | n and d <= k; 1 when no nontrivial divisor fits.
/// Requires n >= 2, k >= 2.
int largest_divisor_at_most(int n, int k);

/// Restricted self-sumset size of a full coset of a size-t subgroup:
/// 0 for t = 1, 1 for t = 2, t for t >= 3. Requires t >= 1.
int coset_sumset_size(int t);

/// Divisors of n in ascending order.
std::vector<int> divisors(int n);

/// ceil(n / k) for positive n, k.
int ceil_div(int n, int k);

// Arithmetic parameters governing the k-coloring problem on Z_n.
struct GroupParams {
  int modulus;          // n
  int colors;           // k
  int top_class_size;   // ceil(n/k): some class is at least this large
  int least_prime;      // least prime divisor of n
  int largest_divisor;  // largest divisor of n that is <= k
};

/// Requires n >= 2, k >= 2; moduli up to 2^20 supported.
GroupParams group_params(int n, int k);

}  // namespace sumset
