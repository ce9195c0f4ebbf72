#pragma once

#include <optional>
#include <string>

#include "sumset/residue_set.hpp"

namespace sumset {

enum class StructureKind {
  empty,
  singleton,
  block,                   // consecutive, no wrap past n-1
  arc,                     // consecutive, wrapping
  arithmetic_progression,  // prime modulus only
  coset_subset,            // inside one coset of a proper nontrivial subgroup
  unstructured,
};

// Classification of a set with parameters that regenerate it (for the
// generative kinds) or pin down the containing coset (coset_subset).
struct StructureTag {
  StructureKind kind = StructureKind::empty;
  int start = 0;       // block/arc/AP start; singleton element
  int length = 0;      // block/arc/AP length
  int difference = 0;  // AP step
  int subgroup_size = 0;          // coset_subset
  int coset_representative = 0;   // coset_subset
};

const char* structure_kind_name(StructureKind kind);

/// Most specific applicable kind, precedence
/// empty > singleton > block > arc > arithmetic-progression > coset-subset.
/// AP detection runs only when prime_hint is set and the modulus is prime.
StructureTag classify(const ResidueSet& a, bool prime_hint);

/// Smallest step d in [1, n) such that A = {s, s+d, ..., s+(|A|-1)d} for
/// some s, or nullopt. Requires prime modulus and |A| >= 2.
std::optional<int> arithmetic_progression_step(const ResidueSet& a);

/// The set described by a generative tag; for coset_subset, the
/// containing coset. Rejects unstructured tags.
ResidueSet regenerate(const StructureTag& tag, int modulus);

/// Minimum of u*A + v over all units u and shifts v, under
/// ResidueSet::lex_precedes. Requires p prime and A over Z_p. Idempotent,
/// and constant on affine orbits.
ResidueSet affine_canonical_form(const ResidueSet& a, int p);

}  // namespace sumset
