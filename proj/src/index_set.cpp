#include "gradealg/index_set.hpp"

#include <algorithm>

namespace gradealg {

IndexSet IndexSet::finite(std::vector<long> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!elems.empty() && elems.front() < 1) throw IndexError("indices must be >= 1");
  IndexSet s;
  s.kind_ = Kind::finite;
  s.elems_ = std::move(elems);
  return s;
}

IndexSet IndexSet::range(long a, long b) {
  if (a < 1 || b < a) throw IndexError("bad index range");
  std::vector<long> e;
  for (long i = a; i <= b; ++i) e.push_back(i);
  return finite(std::move(e));
}

IndexSet IndexSet::arithmetic(long first, long step) {
  if (first < 1 || step < 1) throw IndexError("bad arithmetic progression");
  IndexSet s;
  s.kind_ = Kind::ap;
  s.first_ = first;
  s.step_ = step;
  return s;
}

IndexSet IndexSet::blocks(IndexSet base, long m) {
  if (m < 1) throw IndexError("block size must be >= 1");
  IndexSet s;
  s.kind_ = Kind::blocks;
  s.base_ = std::make_shared<IndexSet>(std::move(base));
  s.m_ = m;
  return s;
}

bool IndexSet::is_finite() const {
  switch (kind_) {
    case Kind::finite:
      return true;
    case Kind::ap:
      return false;
    case Kind::blocks:
      return base_->is_finite();
  }
  return true;
}

long IndexSet::size() const {
  switch (kind_) {
    case Kind::finite:
      return static_cast<long>(elems_.size());
    case Kind::ap:
      throw IndexError("size of an infinite set");
    case Kind::blocks:
      return base_->size() * m_;
  }
  return 0;
}

bool IndexSet::contains(long i) const {
  if (i < 1) return false;
  switch (kind_) {
    case Kind::finite:
      return std::binary_search(elems_.begin(), elems_.end(), i);
    case Kind::ap:
      return i >= first_ && (i - first_) % step_ == 0;
    case Kind::blocks:
      return base_->contains((i - 1) / m_ + 1);
  }
  return false;
}

long IndexSet::at(long k) const {
  if (k < 1) throw IndexError("enumeration index must be >= 1");
  switch (kind_) {
    case Kind::finite:
      if (k > static_cast<long>(elems_.size())) throw IndexError("enumeration out of range");
      return elems_[k - 1];
    case Kind::ap:
      return first_ + (k - 1) * step_;
    case Kind::blocks: {
      long t = (k - 1) / m_ + 1;
      long s = k - (t - 1) * m_;
      return (base_->at(t) - 1) * m_ + s;
    }
  }
  return 0;
}

long IndexSet::index_of(long i) const {
  switch (kind_) {
    case Kind::finite: {
      auto it = std::lower_bound(elems_.begin(), elems_.end(), i);
      if (it == elems_.end() || *it != i) throw IndexError("index not in set");
      return static_cast<long>(it - elems_.begin()) + 1;
    }
    case Kind::ap:
      if (!contains(i)) throw IndexError("index not in set");
      return (i - first_) / step_ + 1;
    case Kind::blocks: {
      long j = (i - 1) / m_ + 1;
      long s = i - (j - 1) * m_;
      return (base_->index_of(j) - 1) * m_ + s;
    }
  }
  return 0;
}

std::vector<long> IndexSet::up_to(long n) const {
  std::vector<long> out;
  for (long k = 1;; ++k) {
    if (kind_ == Kind::finite && k > static_cast<long>(elems_.size())) break;
    long v = at(k);
    if (v > n) break;
    out.push_back(v);
  }
  return out;
}

std::string IndexSet::str() const {
  switch (kind_) {
    case Kind::finite: {
      std::string s = "{";
      for (size_t i = 0; i < elems_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(elems_[i]);
      }
      return s + "}";
    }
    case Kind::ap:
      return "{" + std::to_string(first_) + " + " + std::to_string(step_) + "k}";
    case Kind::blocks:
      return "blocks(" + base_->str() + ", m=" + std::to_string(m_) + ")";
  }
  return "";
}

// ---- IndexPerm ----

IndexPerm IndexPerm::identity() { return blockwise(1, {1}); }

IndexPerm IndexPerm::finite(const std::vector<std::pair<long, long>>& moved) {
  IndexPerm p;
  p.kind_ = Kind::finite;
  p.fwd_ = moved;
  std::sort(p.fwd_.begin(), p.fwd_.end());
  std::vector<long> srcs, dsts;
  for (auto& [a, b] : p.fwd_) {
    if (a < 1 || b < 1) throw IndexError("permutation indices must be >= 1");
    srcs.push_back(a);
    dsts.push_back(b);
    p.rev_.emplace_back(b, a);
  }
  std::sort(p.rev_.begin(), p.rev_.end());
  std::sort(dsts.begin(), dsts.end());
  if (std::adjacent_find(srcs.begin(), srcs.end()) != srcs.end() ||
      std::adjacent_find(dsts.begin(), dsts.end()) != dsts.end() || srcs != dsts)
    throw IndexError("not a bijection on the moved set");
  return p;
}

IndexPerm IndexPerm::blockwise(long K, std::vector<long> sigma) {
  if (K < 1 || static_cast<long>(sigma.size()) != K)
    throw IndexError("blockwise permutation needs |sigma| = K");
  IndexPerm p;
  p.kind_ = Kind::block;
  p.K_ = K;
  p.sigma_ = sigma;
  p.sigma_inv_.assign(K, 0);
  std::vector<bool> seen(K, false);
  for (long r = 1; r <= K; ++r) {
    long v = sigma[r - 1];
    if (v < 1 || v > K || seen[v - 1]) throw IndexError("sigma is not a permutation of 1..K");
    seen[v - 1] = true;
    p.sigma_inv_[v - 1] = r;
  }
  return p;
}

long IndexPerm::apply(long n) const {
  if (n < 1) throw IndexError("permutation argument must be >= 1");
  if (kind_ == Kind::finite) {
    auto it = std::lower_bound(fwd_.begin(), fwd_.end(), std::make_pair(n, 0L));
    if (it != fwd_.end() && it->first == n) return it->second;
    return n;
  }
  long q = (n - 1) / K_, r = (n - 1) % K_ + 1;
  return q * K_ + sigma_[r - 1];
}

long IndexPerm::inverse(long n) const {
  if (n < 1) throw IndexError("permutation argument must be >= 1");
  if (kind_ == Kind::finite) {
    auto it = std::lower_bound(rev_.begin(), rev_.end(), std::make_pair(n, 0L));
    if (it != rev_.end() && it->first == n) return it->second;
    return n;
  }
  long q = (n - 1) / K_, r = (n - 1) % K_ + 1;
  return q * K_ + sigma_inv_[r - 1];
}

long IndexPerm::finite_bound() const {
  if (kind_ != Kind::finite || fwd_.empty()) return 0;
  long b = 0;
  for (auto& [a, v] : fwd_) b = std::max({b, a, v});
  return b;
}

long IndexPerm::block_period() const { return kind_ == Kind::block ? K_ : 1; }

}  // namespace gradealg
