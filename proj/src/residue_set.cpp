#include "sumset/residue_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "sumset/arith.hpp"

namespace sumset {

namespace {

constexpr int kWordBits = 64;

int words_for(int n) { return (n + kWordBits - 1) / kWordBits; }

// Mask selecting the valid bits of the top word.
std::uint64_t top_mask(int n) {
  const int rem = n % kWordBits;
  return rem == 0 ? ~0ULL : ((1ULL << rem) - 1);
}

// Non-circular shift of an n-bit field toward higher residues.
std::vector<std::uint64_t> shifted_up(const std::vector<std::uint64_t>& in,
                                      int s) {
  const int ws = s / kWordBits;
  const int bs = s % kWordBits;
  std::vector<std::uint64_t> out(in.size(), 0);
  for (int i = static_cast<int>(in.size()) - 1; i >= ws; --i) {
    std::uint64_t w = in[i - ws] << bs;
    if (bs != 0 && i - ws - 1 >= 0) w |= in[i - ws - 1] >> (kWordBits - bs);
    out[i] = w;
  }
  return out;
}

// Non-circular shift toward lower residues.
std::vector<std::uint64_t> shifted_down(const std::vector<std::uint64_t>& in,
                                        int s) {
  const int ws = s / kWordBits;
  const int bs = s % kWordBits;
  const int size = static_cast<int>(in.size());
  std::vector<std::uint64_t> out(in.size(), 0);
  for (int i = 0; i + ws < size; ++i) {
    std::uint64_t w = in[i + ws] >> bs;
    if (bs != 0 && i + ws + 1 < size) w |= in[i + ws + 1] << (kWordBits - bs);
    out[i] = w;
  }
  return out;
}

}  // namespace

ResidueSet::ResidueSet(int modulus) : n_(modulus), size_(0) {
  if (modulus < 1) throw std::invalid_argument("ResidueSet: modulus must be >= 1");
  words_.assign(words_for(modulus), 0);
}

ResidueSet::ResidueSet(int modulus, std::initializer_list<int> members)
    : ResidueSet(modulus) {
  for (int r : members) add(r);
}

ResidueSet ResidueSet::from_members(int modulus, const std::vector<int>& members) {
  ResidueSet out(modulus);
  for (int r : members) {
    out.check_range(r);
    if (out.contains(r)) {
      throw std::invalid_argument("ResidueSet: duplicate residue " +
                                  std::to_string(r));
    }
    out.add(r);
  }
  return out;
}

ResidueSet ResidueSet::full(int modulus) {
  ResidueSet out(modulus);
  for (auto& w : out.words_) w = ~0ULL;
  out.words_.back() &= top_mask(modulus);
  out.size_ = modulus;
  return out;
}

void ResidueSet::check_range(int r) const {
  if (r < 0 || r >= n_) {
    throw std::invalid_argument("ResidueSet: residue " + std::to_string(r) +
                                " out of range for modulus " + std::to_string(n_));
  }
}

bool ResidueSet::contains(int r) const {
  check_range(r);
  return (words_[r / kWordBits] >> (r % kWordBits)) & 1;
}

void ResidueSet::add(int r) {
  check_range(r);
  std::uint64_t& w = words_[r / kWordBits];
  const std::uint64_t bit = 1ULL << (r % kWordBits);
  if (!(w & bit)) {
    w |= bit;
    ++size_;
  }
}

void ResidueSet::remove(int r) {
  check_range(r);
  std::uint64_t& w = words_[r / kWordBits];
  const std::uint64_t bit = 1ULL << (r % kWordBits);
  if (w & bit) {
    w &= ~bit;
    --size_;
  }
}

std::vector<int> ResidueSet::members() const {
  std::vector<int> out;
  out.reserve(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<int>(i) * kWordBits + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

int ResidueSet::min_member() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
    }
  }
  throw std::logic_error("min_member of empty set");
}

int ResidueSet::max_member() const {
  for (int i = static_cast<int>(words_.size()) - 1; i >= 0; --i) {
    if (words_[i] != 0) {
      return i * kWordBits + (kWordBits - 1 - std::countl_zero(words_[i]));
    }
  }
  throw std::logic_error("max_member of empty set");
}

bool ResidueSet::is_subset_of(const ResidueSet& other) const {
  if (n_ != other.n_) throw std::invalid_argument("is_subset_of: modulus mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

ResidueSet ResidueSet::shifted(int delta) const {
  int s = delta % n_;
  if (s < 0) s += n_;
  ResidueSet out(n_);
  out.size_ = size_;
  if (s == 0) {
    out.words_ = words_;
    return out;
  }
  auto up = shifted_up(words_, s);
  auto down = shifted_down(words_, n_ - s);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = up[i] | down[i];
  out.words_.back() &= top_mask(n_);
  return out;
}

ResidueSet ResidueSet::scaled(int u) const {
  ResidueSet out(n_);
  long long uu = u % n_;
  if (uu < 0) uu += n_;
  for (int x : members()) {
    const int y = static_cast<int>((uu * x) % n_);
    out.add(y);
  }
  return out;
}

ResidueSet ResidueSet::intersect(const ResidueSet& other) const {
  if (n_ != other.n_) throw std::invalid_argument("intersect: modulus mismatch");
  ResidueSet out(n_);
  int count = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i] = words_[i] & other.words_[i];
    count += std::popcount(out.words_[i]);
  }
  out.size_ = count;
  return out;
}

ResidueSet ResidueSet::unite(const ResidueSet& other) const {
  if (n_ != other.n_) throw std::invalid_argument("unite: modulus mismatch");
  ResidueSet out(n_);
  int count = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i] = words_[i] | other.words_[i];
    count += std::popcount(out.words_[i]);
  }
  out.size_ = count;
  return out;
}

bool ResidueSet::lex_precedes(const ResidueSet& other) const {
  if (n_ != other.n_) throw std::invalid_argument("lex_precedes: modulus mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t diff = words_[i] ^ other.words_[i];
    if (diff != 0) {
      // The set holding the smallest differing residue comes first.
      return (words_[i] >> std::countr_zero(diff)) & 1;
    }
  }
  return false;  // equal
}

std::string ResidueSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int r : members()) {
    if (!first) out += ",";
    out += std::to_string(r);
    first = false;
  }
  out += "}";
  return out;
}

ResidueSet restricted_sumset(const ResidueSet& a) {
  ResidueSet out(a.modulus());
  if (a.size() <= 1) return out;
  for (int x : a.members()) {
    ResidueSet rest = a;
    rest.remove(x);
    out = out.unite(rest.shifted(x));
  }
  return out;
}

bool lift_and_check_window(const std::vector<long long>& values, int n) {
  if (n < 2) throw std::invalid_argument("lift_and_check_window: need n >= 2");
  if (values.empty()) return true;
  std::vector<long long> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const long long diameter = sorted.back() - sorted.front();
  if (diameter >= least_prime_divisor(n)) return false;
  // The window guarantee claims injectivity; confirm it directly.
  ResidueSet reduced(n);
  for (long long v : sorted) {
    long long r = v % n;
    if (r < 0) r += n;
    reduced.add(static_cast<int>(r));
  }
  if (reduced.size() != static_cast<int>(sorted.size())) {
    throw std::logic_error("lift_and_check_window: collision inside a narrow window");
  }
  return true;
}

}  // namespace sumset
