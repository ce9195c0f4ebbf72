#pragma once

#include <vector>

#include "sumset/residue_set.hpp"

namespace sumset {

// A partition of Z_n into k color classes, some possibly empty. Stored
// as a per-residue class index with the class sets materialized once at
// construction.
class Coloring {
 public:
  /// assignment[r] in [0, k) for every residue r. Throws on bad input.
  Coloring(int n, int k, std::vector<int> assignment);

  /// Classes listed as ascending residue lists; must be disjoint and
  /// cover Z_n. Throws otherwise.
  static Coloring from_classes(int n, int k,
                               const std::vector<std::vector<int>>& classes);

  int modulus() const noexcept { return n_; }
  int num_classes() const noexcept { return k_; }
  const std::vector<int>& assignment() const noexcept { return assignment_; }
  const std::vector<ResidueSet>& classes() const noexcept { return classes_; }
  int max_class_size() const;

  bool operator==(const Coloring& other) const {
    return n_ == other.n_ && k_ == other.k_ && assignment_ == other.assignment_;
  }

 private:
  int n_;
  int k_;
  std::vector<int> assignment_;
  std::vector<ResidueSet> classes_;
};

// Worst-class view of a coloring.
struct Evaluation {
  std::vector<int> class_sumset_sizes;
  int value = 0;         // max over classes
  int argmax_class = 0;  // first class attaining the max
};

Evaluation evaluate(const Coloring& coloring);

/// k consecutive non-wrapping blocks starting at 0; with n = a*k + b the
/// first b blocks have length a+1 and the rest length a. Largest block
/// size is ceil(n/k). Requires n, k >= 2.
Coloring block_partition(int n, int k);

/// One class per coset of the subgroup of index q = largest divisor of n
/// at most k; if k > q the largest remaining class is halved (ascending
/// member list split into lower ceil-half and upper floor-half, ties on
/// size broken by smallest class index) until k classes exist. Every
/// class stays inside one coset. Requires n, k >= 2.
Coloring coset_partition(int n, int k);

enum class ConstructionMethod { block, coset };

struct Construction {
  Coloring coloring;
  Evaluation evaluation;
  ConstructionMethod method;
};

/// The better (lower-value) of block_partition and coset_partition;
/// ties go to the block construction.
Construction best_construction(int n, int k);

const char* construction_method_name(ConstructionMethod method);

}  // namespace sumset
