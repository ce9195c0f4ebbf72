#pragma once

#include <optional>
#include <vector>

#include "sumset/residue_set.hpp"

namespace sumset {

// The unique subgroup of Z_n of a given size t | n, together with its
// coset decomposition. The subgroup is generated by n/t, and coset i
// (i = 0..index-1) is i + H, keyed by its smallest element.
struct SubgroupContext {
  int n;          // ambient modulus
  int size;       // t = |H|
  int generator;  // n/t
  int index;      // number of cosets, equals the generator for Z_n
  std::vector<ResidueSet> cosets;

  const ResidueSet& subgroup() const { return cosets.front(); }
  /// Index of the coset containing residue r.
  int coset_of(int r) const { return r % index; }
};

/// Requires t >= 1 and t | n.
SubgroupContext subgroup_of_size(int n, int t);

// How a set meets the coset decomposition.
struct QuotientStats {
  int occupied = 0;                // cosets meeting A
  int with_pairs = 0;              // cosets holding >= 2 elements of A
  std::optional<int> heaviest;     // index of a largest-intersection coset
                                   // (ties: smallest representative)
  int heaviest_size = 0;           // that intersection size; 0 when empty
};

QuotientStats quotient_stats(const ResidueSet& a, const SubgroupContext& h);

}  // namespace sumset
