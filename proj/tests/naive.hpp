#pragma once

// Independent reference implementations for the tests: plain pair loops
// and std::set, no masks, no shifting. Expected values in the tests are
// frozen from these.

#include <cstdint>
#include <set>
#include <vector>

#include "sumset/residue_set.hpp"

namespace testhelp {

inline std::set<int> naive_restricted_sumset(const std::vector<int>& members,
                                             int n) {
  std::set<int> sums;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      sums.insert((members[i] + members[j]) % n);
    }
  }
  return sums;
}

inline std::set<int> naive_restricted_sumset(const sumset::ResidueSet& a) {
  return naive_restricted_sumset(a.members(), a.modulus());
}

inline std::vector<int> mask_members(std::uint64_t mask, int n) {
  std::vector<int> out;
  for (int r = 0; r < n; ++r) {
    if ((mask >> r) & 1) out.push_back(r);
  }
  return out;
}

inline sumset::ResidueSet set_of(int n, const std::vector<int>& members) {
  sumset::ResidueSet out(n);
  for (int r : members) out.add(r);
  return out;
}

inline sumset::ResidueSet set_of_mask(int n, std::uint64_t mask) {
  return set_of(n, mask_members(mask, n));
}

}  // namespace testhelp
