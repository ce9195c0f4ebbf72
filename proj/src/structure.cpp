#include "sumset/structure.hpp"

#include <stdexcept>

#include "sumset/arith.hpp"

namespace sumset {

const char* structure_kind_name(StructureKind kind) {
  switch (kind) {
    case StructureKind::empty: return "empty";
    case StructureKind::singleton: return "singleton";
    case StructureKind::block: return "block";
    case StructureKind::arc: return "arc";
    case StructureKind::arithmetic_progression: return "arithmetic-progression";
    case StructureKind::coset_subset: return "coset-subset";
    case StructureKind::unstructured: return "unstructured";
  }
  return "?";
}

namespace {

// Number of residues r in A whose successor r+1 is outside A. Zero only
// for the empty and full sets; one exactly for arcs.
int boundary_count(const ResidueSet& a) {
  const int n = a.modulus();
  int count = 0;
  for (int r = 0; r < n; ++r) {
    if (a.contains(r) && !a.contains((r + 1) % n)) ++count;
  }
  return count;
}

std::optional<StructureTag> detect_coset_subset(const ResidueSet& a) {
  const int n = a.modulus();
  // Smallest containing subgroup first: all members congruent mod n/t.
  for (int t : divisors(n)) {
    if (t <= 1 || t >= n) continue;
    const int generator = n / t;
    const auto members = a.members();
    const int rep = members.front() % generator;
    bool inside = true;
    for (int x : members) {
      if (x % generator != rep) {
        inside = false;
        break;
      }
    }
    if (inside) {
      StructureTag tag;
      tag.kind = StructureKind::coset_subset;
      tag.subgroup_size = t;
      tag.coset_representative = rep;
      return tag;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> arithmetic_progression_step(const ResidueSet& a) {
  const int p = a.modulus();
  if (!is_prime(p)) {
    throw std::invalid_argument("arithmetic_progression_step: modulus must be prime");
  }
  const auto members = a.members();
  const int m = static_cast<int>(members.size());
  if (m < 2) throw std::invalid_argument("arithmetic_progression_step: need |A| >= 2");
  if (m > p) return std::nullopt;
  std::optional<int> best;
  // Any progression through A has (plus or minus) its step among the
  // differences from the smallest member, so these candidates suffice.
  for (int j = 1; j < m; ++j) {
    for (int candidate : {members[j] - members[0], p - (members[j] - members[0])}) {
      const int d = ((candidate % p) + p) % p;
      if (d == 0 || (best && d >= *best)) continue;
      // Chain start: the unique element whose predecessor is outside A.
      int start = -1;
      int starts = 0;
      for (int x : members) {
        if (!a.contains(((x - d) % p + p) % p)) {
          start = x;
          ++starts;
        }
      }
      if (m == p) {  // full group: every nonzero step works from any start
        start = members[0];
        starts = 1;
      }
      if (starts != 1) continue;
      bool walk_ok = true;
      int cur = start;
      for (int i = 1; i < m; ++i) {
        cur = (cur + d) % p;
        if (!a.contains(cur)) {
          walk_ok = false;
          break;
        }
      }
      if (walk_ok) best = d;
    }
  }
  return best;
}

StructureTag classify(const ResidueSet& a, bool prime_hint) {
  const int n = a.modulus();
  StructureTag tag;
  if (a.empty()) {
    tag.kind = StructureKind::empty;
    return tag;
  }
  if (a.size() == 1) {
    tag.kind = StructureKind::singleton;
    tag.start = a.min_member();
    tag.length = 1;
    return tag;
  }
  if (a.max_member() - a.min_member() + 1 == a.size()) {
    tag.kind = StructureKind::block;
    tag.start = a.min_member();
    tag.length = a.size();
    return tag;
  }
  if (a.size() < n && boundary_count(a) == 1) {
    tag.kind = StructureKind::arc;
    for (int r = 0; r < n; ++r) {
      if (a.contains(r) && !a.contains((r - 1 + n) % n)) {
        tag.start = r;
        break;
      }
    }
    tag.length = a.size();
    return tag;
  }
  if (prime_hint && is_prime(n)) {
    if (auto step = arithmetic_progression_step(a)) {
      tag.kind = StructureKind::arithmetic_progression;
      tag.difference = *step;
      tag.length = a.size();
      for (int x : a.members()) {
        if (!a.contains(((x - *step) % n + n) % n)) {
          tag.start = x;
          break;
        }
      }
      return tag;
    }
  }
  if (auto coset = detect_coset_subset(a)) return *coset;
  tag.kind = StructureKind::unstructured;
  return tag;
}

ResidueSet regenerate(const StructureTag& tag, int modulus) {
  ResidueSet out(modulus);
  switch (tag.kind) {
    case StructureKind::empty:
      return out;
    case StructureKind::singleton:
      out.add(tag.start % modulus);
      return out;
    case StructureKind::block:
    case StructureKind::arc:
      for (int i = 0; i < tag.length; ++i) out.add((tag.start + i) % modulus);
      return out;
    case StructureKind::arithmetic_progression: {
      long long cur = tag.start;
      for (int i = 0; i < tag.length; ++i) {
        out.add(static_cast<int>(cur % modulus));
        cur += tag.difference;
      }
      return out;
    }
    case StructureKind::coset_subset: {
      const int generator = modulus / tag.subgroup_size;
      for (int j = 0; j < tag.subgroup_size; ++j) {
        out.add((tag.coset_representative + j * generator) % modulus);
      }
      return out;
    }
    case StructureKind::unstructured:
      break;
  }
  throw std::invalid_argument("regenerate: tag carries no witness");
}

ResidueSet affine_canonical_form(const ResidueSet& a, int p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("affine_canonical_form: modulus must be prime");
  }
  if (a.modulus() != p) {
    throw std::invalid_argument("affine_canonical_form: set not over Z_p");
  }
  ResidueSet best = a;
  for (int u = 1; u < p; ++u) {
    const ResidueSet scaled = a.scaled(u);
    for (int v = 0; v < p; ++v) {
      const ResidueSet image = scaled.shifted(v);
      if (image.lex_precedes(best)) best = image;
    }
  }
  return best;
}

}  // namespace sumset
