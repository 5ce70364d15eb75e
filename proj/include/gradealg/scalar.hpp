#ifndef GRADEALG_SCALAR_HPP
#define GRADEALG_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace gradealg {

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficient field selection. "rational" is exact arbitrary-precision
// rationals; "fp:<prime>" switches the whole process to GF(p). The field
// is fixed once per run (the CLI reads GRADEALG_FIELD at startup); scalars
// created under different modes must not be mixed.
struct FieldConfig {
  bool is_fp = false;
  unsigned long p = 0;
};

void set_field(const FieldConfig& cfg);
const FieldConfig& field();
// Parses "rational" or "fp:<prime>". Throws ScalarError on anything else.
FieldConfig parse_field_spec(const std::string& s);

// Exact scalar: a rational number, reduced mod p in prime-field mode.
class Scalar {
 public:
  using Rat = boost::multiprecision::cpp_rational;
  using Int = boost::multiprecision::cpp_int;

  Scalar() : v_(0) {}
  Scalar(long n) : v_(n) { canon_(); }
  Scalar(long num, long den);
  static Scalar from_rat(Rat r);

  bool is_zero() const { return v_ == 0; }
  const Rat& rat() const { return v_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inv() const;

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return v_ != o.v_; }

  // "-3/2", "5". Round-trips with parse().
  std::string str() const;
  static std::optional<Scalar> parse(const std::string& s);

  Int numerator() const { return boost::multiprecision::numerator(v_); }
  Int denominator() const { return boost::multiprecision::denominator(v_); }

 private:
  Rat v_;
  void canon_();
};

}  // namespace gradealg

#endif
