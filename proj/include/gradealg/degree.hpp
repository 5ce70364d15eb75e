#ifndef GRADEALG_DEGREE_HPP
#define GRADEALG_DEGREE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradealg {

struct DegreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of the grading group Z^d. d = 0 is the trivial group; ordinary
// Z-gradings use d = 1. Degrees of different dimensions never mix.
class Degree {
 public:
  Degree() = default;  // dimension 0
  explicit Degree(std::vector<long> c) : c_(std::move(c)) {}
  static Degree zero(int dim) { return Degree(std::vector<long>(dim, 0)); }
  static Degree z(long n) { return Degree({n}); }  // Z-grading shortcut

  int dim() const { return static_cast<int>(c_.size()); }
  long operator[](int i) const { return c_[i]; }
  const std::vector<long>& coords() const { return c_; }
  bool is_zero() const;

  Degree operator+(const Degree& o) const;
  Degree operator-(const Degree& o) const;
  Degree operator-() const;

  bool operator==(const Degree& o) const { return c_ == o.c_; }
  bool operator!=(const Degree& o) const { return c_ != o.c_; }
  bool operator<(const Degree& o) const;

  std::string str() const;  // "3" for d=1, "(1,0)" otherwise

 private:
  std::vector<long> c_;
};

}  // namespace gradealg

#endif
