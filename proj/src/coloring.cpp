#include "sumset/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "sumset/arith.hpp"
#include "sumset/subgroup.hpp"

namespace sumset {

Coloring::Coloring(int n, int k, std::vector<int> assignment)
    : n_(n), k_(k), assignment_(std::move(assignment)) {
  if (n < 1 || k < 1) throw std::invalid_argument("Coloring: need n, k >= 1");
  if (static_cast<int>(assignment_.size()) != n) {
    throw std::invalid_argument("Coloring: assignment must cover all residues");
  }
  classes_.assign(k_, ResidueSet(n_));
  for (int r = 0; r < n_; ++r) {
    const int c = assignment_[r];
    if (c < 0 || c >= k_) {
      throw std::invalid_argument("Coloring: class index out of range");
    }
    classes_[c].add(r);
  }
}

Coloring Coloring::from_classes(int n, int k,
                                const std::vector<std::vector<int>>& classes) {
  if (static_cast<int>(classes.size()) != k) {
    throw std::invalid_argument("Coloring: expected exactly k classes");
  }
  std::vector<int> assignment(n, -1);
  for (int c = 0; c < k; ++c) {
    for (int r : classes[c]) {
      if (r < 0 || r >= n) throw std::invalid_argument("Coloring: residue out of range");
      if (assignment[r] != -1) {
        throw std::invalid_argument("Coloring: classes overlap at residue " +
                                    std::to_string(r));
      }
      assignment[r] = c;
    }
  }
  for (int r = 0; r < n; ++r) {
    if (assignment[r] == -1) {
      throw std::invalid_argument("Coloring: residue " + std::to_string(r) +
                                  " unassigned");
    }
  }
  return Coloring(n, k, std::move(assignment));
}

int Coloring::max_class_size() const {
  int best = 0;
  for (const auto& cls : classes_) best = std::max(best, cls.size());
  return best;
}

Evaluation evaluate(const Coloring& coloring) {
  Evaluation eval;
  eval.class_sumset_sizes.reserve(coloring.num_classes());
  for (const auto& cls : coloring.classes()) {
    eval.class_sumset_sizes.push_back(restricted_sumset(cls).size());
  }
  const auto it = std::max_element(eval.class_sumset_sizes.begin(),
                                   eval.class_sumset_sizes.end());
  eval.value = *it;
  eval.argmax_class = static_cast<int>(it - eval.class_sumset_sizes.begin());
  return eval;
}

Coloring block_partition(int n, int k) {
  if (n < 2 || k < 2) throw std::invalid_argument("block_partition: need n, k >= 2");
  const int a = n / k;
  const int b = n % k;
  std::vector<int> assignment(n);
  int r = 0;
  for (int c = 0; c < k && r < n; ++c) {
    const int len = c < b ? a + 1 : a;
    for (int i = 0; i < len; ++i) assignment[r++] = c;
  }
  return Coloring(n, k, std::move(assignment));
}

Coloring coset_partition(int n, int k) {
  if (n < 2 || k < 2) throw std::invalid_argument("coset_partition: need n, k >= 2");
  const int q = largest_divisor_at_most(n, k);
  const SubgroupContext ctx = subgroup_of_size(n, n / q);
  std::vector<std::vector<int>> classes;
  classes.reserve(k);
  for (const auto& coset : ctx.cosets) classes.push_back(coset.members());
  // Surplus colors: halve the largest class (smallest index on ties)
  // into the lower ceil-half and upper floor-half of its member list, so
  // every class stays inside one coset.
  while (static_cast<int>(classes.size()) < k) {
    std::size_t largest = 0;
    for (std::size_t i = 1; i < classes.size(); ++i) {
      if (classes[i].size() > classes[largest].size()) largest = i;
    }
    auto& cls = classes[largest];
    const std::size_t cut = (cls.size() + 1) / 2;
    std::vector<int> upper(cls.begin() + cut, cls.end());
    cls.resize(cut);
    classes.push_back(std::move(upper));
  }
  return Coloring::from_classes(n, k, classes);
}

Construction best_construction(int n, int k) {
  Coloring block = block_partition(n, k);
  Evaluation block_eval = evaluate(block);
  Coloring coset = coset_partition(n, k);
  Evaluation coset_eval = evaluate(coset);
  if (coset_eval.value < block_eval.value) {
    return Construction{std::move(coset), std::move(coset_eval),
                        ConstructionMethod::coset};
  }
  return Construction{std::move(block), std::move(block_eval),
                      ConstructionMethod::block};
}

const char* construction_method_name(ConstructionMethod method) {
  return method == ConstructionMethod::block ? "block" : "coset";
}

}  // namespace sumset
