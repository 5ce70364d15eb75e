#ifndef GRADEALG_LINALG_HPP
#define GRADEALG_LINALG_HPP

#include <optional>
#include <vector>

#include "gradealg/scalar.hpp"

namespace gradealg {

using Vec = std::vector<Scalar>;

bool vec_is_zero(const Vec& v);

// Row span kept in reduced echelon form. Insertion order is the pivot
// order, which makes every computed basis deterministic.
class RowSpace {
 public:
  explicit RowSpace(int width) : width_(width) {}

  // Reduces v against the current basis; inserts the remainder if nonzero.
  // Returns true when v enlarged the span.
  bool insert(Vec v);

  int width() const { return width_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }
  // Coordinates of v in the reduced basis, if v lies in the span.
  std::optional<Vec> coordinates(const Vec& v) const;

 private:
  int width_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

// Same as RowSpace but remembers how each basis row was produced from the
// inserted generators, so members can be expressed in generator terms.
class RowSpaceCombos {
 public:
  explicit RowSpaceCombos(int width) : width_(width) {}

  // Returns the generator index recorded for v (whether or not v was
  // independent); generators are numbered in insertion order.
  int insert(Vec v);

  int rank() const { return static_cast<int>(rows_.size()); }
  bool contains(const Vec& v) const;
  // Coefficients over the inserted generators with target = sum c_g * gen_g,
  // or nullopt when target is outside the span.
  std::optional<std::vector<Scalar>> express(const Vec& target) const;

 private:
  int width_;
  int ngen_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
  std::vector<std::vector<Scalar>> combos_;  // combos_[r][g]
};

}  // namespace gradealg

#endif
