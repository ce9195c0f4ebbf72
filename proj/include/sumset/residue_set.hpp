#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sumset {

// A subset of Z_n stored as a packed membership mask over residues
// 0..n-1, with the cardinality cached. Values are cheap to copy and
// never mutated by the engine once built, so they can be shared freely
// across threads.
class ResidueSet {
 public:
  explicit ResidueSet(int modulus);
  ResidueSet(int modulus, std::initializer_list<int> members);

  /// Throws std::invalid_argument on out-of-range or duplicate members.
  static ResidueSet from_members(int modulus, const std::vector<int>& members);
  static ResidueSet full(int modulus);

  int modulus() const noexcept { return n_; }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool contains(int r) const;

  void add(int r);     // no-op if already present
  void remove(int r);  // no-op if absent

  /// Members in ascending order.
  std::vector<int> members() const;

  int min_member() const;  // requires nonempty
  int max_member() const;  // requires nonempty

  bool is_subset_of(const ResidueSet& other) const;

  /// {x + delta mod n : x in this}; delta may be any integer.
  ResidueSet shifted(int delta) const;

  /// {u*x mod n : x in this}.
  ResidueSet scaled(int u) const;

  ResidueSet intersect(const ResidueSet& other) const;
  ResidueSet unite(const ResidueSet& other) const;

  bool operator==(const ResidueSet& other) const = default;

  // Order used by canonical forms: at the smallest residue where the two
  // masks differ, the set containing it comes first. Equivalent to
  // comparing ascending member lists lexicographically when sizes match.
  bool lex_precedes(const ResidueSet& other) const;

  // Low word of the mask (residue r at bit r of word r/64); fast paths
  // for n <= 64 live on word(0).
  std::uint64_t word(std::size_t i) const { return words_[i]; }
  std::size_t word_count() const { return words_.size(); }

  /// "{0,1,4}" with ascending members.
  std::string to_string() const;

 private:
  int n_;
  int size_;
  std::vector<std::uint64_t> words_;

  void check_range(int r) const;
};

/// All sums a+a' mod n over unordered pairs of distinct a, a' in A;
/// empty when |A| <= 1.
ResidueSet restricted_sumset(const ResidueSet& a);

/// True iff the integer set spans fewer than least_prime_divisor(n)
/// consecutive integers, in which case reduction mod n is injective on it
/// (checked directly). Requires n >= 2.
bool lift_and_check_window(const std::vector<long long>& values, int n);

}  // namespace sumset
