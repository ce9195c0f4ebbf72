#include "sumset/subgroup.hpp"

#include <stdexcept>

namespace sumset {

SubgroupContext subgroup_of_size(int n, int t) {
  if (n < 2) throw std::invalid_argument("subgroup_of_size: need n >= 2");
  if (t < 1 || n % t != 0) {
    throw std::invalid_argument("subgroup_of_size: " + std::to_string(t) +
                                " does not divide " + std::to_string(n));
  }
  const int generator = n / t;
  SubgroupContext ctx{.n = n,
                      .size = t,
                      .generator = generator,
                      .index = generator,
                      .cosets = {}};
  ctx.cosets.reserve(ctx.index);
  for (int rep = 0; rep < ctx.index; ++rep) {
    ResidueSet coset(n);
    for (int j = 0; j < t; ++j) coset.add(rep + j * generator);
    ctx.cosets.push_back(std::move(coset));
  }
  return ctx;
}

QuotientStats quotient_stats(const ResidueSet& a, const SubgroupContext& h) {
  if (a.modulus() != h.n) {
    throw std::invalid_argument("quotient_stats: modulus mismatch");
  }
  QuotientStats stats;
  for (int i = 0; i < h.index; ++i) {
    const int hit = a.intersect(h.cosets[i]).size();
    if (hit == 0) continue;
    ++stats.occupied;
    if (hit >= 2) ++stats.with_pairs;
    if (hit > stats.heaviest_size) {
      stats.heaviest_size = hit;
      stats.heaviest = i;  // representatives ascend with the index
    }
  }
  return stats;
}

}  // namespace sumset
