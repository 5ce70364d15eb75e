#ifndef GRADEALG_INDEX_SET_HPP
#define GRADEALG_INDEX_SET_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradealg {

struct IndexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Subset of the positive integers: an explicit finite set, an infinite
// arithmetic progression, or the union of consecutive length-m blocks
// indexed by another set (used for block allocation inside stabilization).
// These are the only infinite descriptions admitted; they keep every
// membership and enumeration question decidable.
class IndexSet {
 public:
  static IndexSet finite(std::vector<long> elems);  // sorted unique, >= 1
  static IndexSet range(long a, long b);            // {a..b}
  static IndexSet single(long a) { return range(a, a); }
  static IndexSet arithmetic(long first, long step);  // {first, first+step, ...}
  static IndexSet all() { return arithmetic(1, 1); }
  // { (j-1)m + s : j in base, 1 <= s <= m }
  static IndexSet blocks(IndexSet base, long m);

  bool is_finite() const;
  long size() const;  // throws when infinite
  bool contains(long i) const;
  long at(long k) const;        // 1-based enumeration in increasing order
  long index_of(long i) const;  // inverse of at(); throws when absent
  std::vector<long> up_to(long n) const;
  std::string str() const;

 private:
  enum class Kind { finite, ap, blocks };
  Kind kind_ = Kind::finite;
  std::vector<long> elems_;
  long first_ = 0, step_ = 0;
  std::shared_ptr<const IndexSet> base_;
  long m_ = 0;
};

// Bijection of the positive integers: a finite rearrangement (identity off
// a finite set) or a blockwise rule permuting residues inside consecutive
// K-blocks.
class IndexPerm {
 public:
  static IndexPerm identity();
  static IndexPerm finite(const std::vector<std::pair<long, long>>& moved);
  // sigma is a permutation of {1..K}; n = qK + r (1 <= r <= K) maps to
  // qK + sigma[r-1].
  static IndexPerm blockwise(long K, std::vector<long> sigma);

  long apply(long n) const;
  long inverse(long n) const;
  // indices beyond which the permutation is blockwise periodic / identity
  long finite_bound() const;  // 0 for pure blockwise/identity
  long block_period() const;  // 1 for finite/identity

 private:
  enum class Kind { finite, block };
  Kind kind_ = Kind::finite;
  std::vector<std::pair<long, long>> fwd_, rev_;  // sorted by first
  long K_ = 1;
  std::vector<long> sigma_, sigma_inv_;
};

}  // namespace gradealg

#endif
