#include "gradealg/degree.hpp"

namespace gradealg {

namespace {
void check_dims(const Degree& a, const Degree& b) {
  if (a.dim() != b.dim()) throw DegreeError("degree dimension mismatch");
}
}  // namespace

bool Degree::is_zero() const {
  for (long x : c_)
    if (x != 0) return false;
  return true;
}

Degree Degree::operator+(const Degree& o) const {
  check_dims(*this, o);
  std::vector<long> r(c_);
  for (size_t i = 0; i < r.size(); ++i) r[i] += o.c_[i];
  return Degree(std::move(r));
}

Degree Degree::operator-(const Degree& o) const {
  check_dims(*this, o);
  std::vector<long> r(c_);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= o.c_[i];
  return Degree(std::move(r));
}

Degree Degree::operator-() const {
  std::vector<long> r(c_);
  for (auto& x : r) x = -x;
  return Degree(std::move(r));
}

bool Degree::operator<(const Degree& o) const {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  return c_ < o.c_;
}

std::string Degree::str() const {
  if (c_.empty()) return "()";
  if (c_.size() == 1) return std::to_string(c_[0]);
  std::string s = "(";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + ")";
}

}  // namespace gradealg
