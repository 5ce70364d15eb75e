#include "gradealg/linalg.hpp"

namespace gradealg {

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

namespace {
int leading(const Vec& v) {
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) return static_cast<int>(i);
  return -1;
}

void axpy(Vec& dst, const Scalar& c, const Vec& src) {
  for (size_t i = 0; i < dst.size(); ++i)
    if (!src[i].is_zero()) dst[i] += c * src[i];
}
}  // namespace

bool RowSpace::insert(Vec v) {
  v = reduce(std::move(v));
  int lead = leading(v);
  if (lead < 0) return false;
  Scalar piv = v[lead].inv();
  for (auto& x : v) x *= piv;
  // back-substitute into existing rows
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = rows_[r][lead];
    if (!c.is_zero()) axpy(rows_[r], -c, v);
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

Vec RowSpace::reduce(Vec v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (!c.is_zero()) axpy(v, -c, rows_[r]);
  }
  return v;
}

std::optional<Vec> RowSpace::coordinates(const Vec& v) const {
  Vec coords(rows_.size());
  Vec w = v;
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = w[pivots_[r]];
    if (!c.is_zero()) {
      coords[r] = c;
      axpy(w, -c, rows_[r]);
    }
  }
  if (!vec_is_zero(w)) return std::nullopt;
  return coords;
}

int RowSpaceCombos::insert(Vec v) {
  int g = ngen_++;
  std::vector<Scalar> combo(static_cast<size_t>(ngen_));
  combo[g] = Scalar(1);
  for (auto& c : combos_) c.resize(ngen_);
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = v[pivots_[r]];
    if (!c.is_zero()) {
      axpy(v, -c, rows_[r]);
      for (int t = 0; t < ngen_; ++t) combo[t] -= c * combos_[r][t];
    }
  }
  int lead = leading(v);
  if (lead < 0) return g;
  Scalar piv = v[lead].inv();
  for (auto& x : v) x *= piv;
  for (auto& x : combo) x *= piv;
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = rows_[r][lead];
    if (!c.is_zero()) {
      axpy(rows_[r], -c, v);
      for (int t = 0; t < ngen_; ++t) combos_[r][t] -= c * combo[t];
    }
  }
  size_t pos = 0;
  while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  pivots_.insert(pivots_.begin() + pos, lead);
  combos_.insert(combos_.begin() + pos, std::move(combo));
  return g;
}

bool RowSpaceCombos::contains(const Vec& v) const {
  Vec w = v;
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = w[pivots_[r]];
    if (!c.is_zero()) axpy(w, -c, rows_[r]);
  }
  return vec_is_zero(w);
}

std::optional<std::vector<Scalar>> RowSpaceCombos::express(const Vec& target) const {
  Vec w = target;
  std::vector<Scalar> out(static_cast<size_t>(ngen_));
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = w[pivots_[r]];
    if (!c.is_zero()) {
      axpy(w, -c, rows_[r]);
      for (int t = 0; t < ngen_; ++t) out[t] += c * combos_[r][t];
    }
  }
  if (!vec_is_zero(w)) return std::nullopt;
  return out;
}

}  // namespace gradealg
