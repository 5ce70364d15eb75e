#ifndef GRADEALG_MATINF_HPP
#define GRADEALG_MATINF_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gradealg/degree.hpp"
#include "gradealg/grading_spec.hpp"
#include "gradealg/index_set.hpp"

namespace gradealg {

struct MatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite-support countably indexed matrix over a graded ring, with a
// suspension grading spec: a grade-lambda matrix has its (i,j) entry in the
// base component of degree lambda + delta_j - delta_i.
template <class R>
struct GradedMatrix {
  using Elem = typename R::Elem;

  R ring;
  GradingSpec spec;
  std::map<std::pair<long, long>, Elem> ent;

  GradedMatrix(R r, GradingSpec s) : ring(std::move(r)), spec(std::move(s)) {}

  void set(long i, long j, Elem v) {
    if (i < 1 || j < 1) throw MatrixError("matrix indices are 1-based");
    if (ring.is_zero(v)) {
      ent.erase({i, j});
    } else {
      ent.insert_or_assign({i, j}, std::move(v));
    }
  }
  void add_at(long i, long j, const Elem& v) {
    auto it = ent.find({i, j});
    if (it == ent.end()) {
      set(i, j, v);
    } else {
      it->second = ring.add(it->second, v);
      if (ring.is_zero(it->second)) ent.erase(it);
    }
  }
  Elem at(long i, long j) const {
    auto it = ent.find({i, j});
    return it == ent.end() ? ring.zero() : it->second;
  }
  bool is_zero() const { return ent.empty(); }
  long max_index() const {
    long m = 0;
    for (auto& [ij, v] : ent) m = std::max({m, ij.first, ij.second});
    return m;
  }
};

template <class R>
GradedMatrix<R> gm_embed(const R& ring, const GradingSpec& spec, typename R::Elem a, long i,
                         long j) {
  GradedMatrix<R> m(ring, spec);
  m.set(i, j, std::move(a));
  return m;
}

template <class R>
GradedMatrix<R> gm_add(const GradedMatrix<R>& x, const GradedMatrix<R>& y) {
  if (!(x.spec == y.spec)) throw MatrixError("grading spec mismatch");
  GradedMatrix<R> r = x;
  for (auto& [ij, v] : y.ent) r.add_at(ij.first, ij.second, v);
  return r;
}

template <class R>
GradedMatrix<R> gm_neg(const GradedMatrix<R>& x) {
  GradedMatrix<R> r = x;
  for (auto& [ij, v] : r.ent) v = r.ring.neg(v);
  return r;
}

template <class R>
GradedMatrix<R> gm_sub(const GradedMatrix<R>& x, const GradedMatrix<R>& y) {
  return gm_add(x, gm_neg(y));
}

template <class R>
GradedMatrix<R> gm_mul(const GradedMatrix<R>& x, const GradedMatrix<R>& y) {
  if (!(x.spec == y.spec)) throw MatrixError("grading spec mismatch");
  GradedMatrix<R> r(x.ring, x.spec);
  for (auto& [ij, v] : x.ent)
    for (auto& [kl, w] : y.ent)
      if (ij.second == kl.first) r.add_at(ij.first, kl.second, x.ring.mul(v, w));
  return r;
}

template <class R>
bool gm_equal(const GradedMatrix<R>& x, const GradedMatrix<R>& y) {
  if (x.ent.size() != y.ent.size()) return false;
  auto it = x.ent.begin();
  auto jt = y.ent.begin();
  for (; it != x.ent.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (!x.ring.equal(it->second, jt->second)) return false;
  }
  return true;
}

// Grade-lambda part: the (i,j) entry contributes its base part of degree
// lambda + delta_j - delta_i.
template <class R>
GradedMatrix<R> gm_component(const GradedMatrix<R>& x, const Degree& lambda) {
  GradedMatrix<R> r(x.ring, x.spec);
  for (auto& [ij, v] : x.ent) {
    Degree want = lambda + x.spec.at(ij.second) - x.spec.at(ij.first);
    auto part = x.ring.component(v, want);
    if (!x.ring.is_zero(part)) r.set(ij.first, ij.second, std::move(part));
  }
  return r;
}

template <class R>
std::vector<Degree> gm_degrees(const GradedMatrix<R>& x) {
  std::set<Degree> s;
  for (auto& [ij, v] : x.ent)
    for (const Degree& d : x.ring.elem_degrees(v))
      s.insert(d - x.spec.at(ij.second) + x.spec.at(ij.first));
  return {s.begin(), s.end()};
}

template <class R>
std::optional<Degree> gm_degree_of(const GradedMatrix<R>& x) {
  auto ds = gm_degrees(x);
  if (ds.size() == 1) return ds[0];
  return std::nullopt;
}

// ---- lazy row/column-finite matrices ----

// Countably indexed matrix given by an entry oracle plus caller-declared
// finite row/column support bounds (upper bounds: the oracle must return 0
// outside them). Entries are memoized; oracles must be pure.
template <class R>
class LazyMatrix {
 public:
  using Elem = typename R::Elem;
  using EntryFn = std::function<Elem(long, long)>;
  using SupportFn = std::function<std::vector<long>(long)>;

  LazyMatrix(R ring, EntryFn entry, SupportFn rows, SupportFn cols)
      : node_(std::make_shared<Node>(std::move(ring), std::move(entry), std::move(rows),
                                     std::move(cols))) {}

  const R& ring() const { return node_->ring; }

  Elem at(long i, long j) const {
    if (i < 1 || j < 1) throw MatrixError("matrix indices are 1-based");
    std::lock_guard<std::mutex> lk(node_->mtx);
    auto it = node_->memo.find({i, j});
    if (it != node_->memo.end()) return it->second;
    Elem v = node_->entry(i, j);
    node_->memo.emplace(std::make_pair(i, j), v);
    return v;
  }
  std::vector<long> row_support(long i) const { return node_->rows(i); }
  std::vector<long> col_support(long j) const { return node_->cols(j); }

 private:
  struct Node {
    R ring;
    EntryFn entry;
    SupportFn rows, cols;
    std::map<std::pair<long, long>, Elem> memo;
    std::mutex mtx;
    Node(R r, EntryFn e, SupportFn ro, SupportFn co)
        : ring(std::move(r)), entry(std::move(e)), rows(std::move(ro)), cols(std::move(co)) {}
  };
  std::shared_ptr<Node> node_;
};

namespace lazydetail {
inline std::vector<long> merge(std::vector<long> a, const std::vector<long>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}
}  // namespace lazydetail

template <class R>
LazyMatrix<R> lz_from_finite(const GradedMatrix<R>& m) {
  auto data = std::make_shared<GradedMatrix<R>>(m);
  return LazyMatrix<R>(
      m.ring, [data](long i, long j) { return data->at(i, j); },
      [data](long i) {
        std::vector<long> out;
        for (auto& [ij, v] : data->ent)
          if (ij.first == i) out.push_back(ij.second);
        return out;
      },
      [data](long j) {
        std::vector<long> out;
        for (auto& [ij, v] : data->ent)
          if (ij.second == j) out.push_back(ij.first);
        return out;
      });
}

// p (x) 1_S: p on the diagonal over S.
template <class R>
LazyMatrix<R> lz_indicator(const R& ring, typename R::Elem p, const IndexSet& S) {
  auto pp = std::make_shared<typename R::Elem>(std::move(p));
  auto set = std::make_shared<IndexSet>(S);
  R r = ring;
  return LazyMatrix<R>(
      ring,
      [r, pp, set](long i, long j) {
        return (i == j && set->contains(i)) ? *pp : r.zero();
      },
      [set](long i) {
        return set->contains(i) ? std::vector<long>{i} : std::vector<long>{};
      },
      [set](long j) {
        return set->contains(j) ? std::vector<long>{j} : std::vector<long>{};
      });
}

template <class R>
LazyMatrix<R> lz_add(const LazyMatrix<R>& x, const LazyMatrix<R>& y) {
  R r = x.ring();
  return LazyMatrix<R>(
      r, [r, x, y](long i, long j) { return r.add(x.at(i, j), y.at(i, j)); },
      [x, y](long i) { return lazydetail::merge(x.row_support(i), y.row_support(i)); },
      [x, y](long j) { return lazydetail::merge(x.col_support(j), y.col_support(j)); });
}

template <class R>
LazyMatrix<R> lz_sub(const LazyMatrix<R>& x, const LazyMatrix<R>& y) {
  R r = x.ring();
  return LazyMatrix<R>(
      r, [r, x, y](long i, long j) { return r.sub(x.at(i, j), y.at(i, j)); },
      [x, y](long i) { return lazydetail::merge(x.row_support(i), y.row_support(i)); },
      [x, y](long j) { return lazydetail::merge(x.col_support(j), y.col_support(j)); });
}

template <class R>
LazyMatrix<R> lz_mul(const LazyMatrix<R>& x, const LazyMatrix<R>& y) {
  R r = x.ring();
  return LazyMatrix<R>(
      r,
      [r, x, y](long i, long j) {
        auto acc = r.zero();
        for (long k : x.row_support(i)) acc = r.add(acc, r.mul(x.at(i, k), y.at(k, j)));
        return acc;
      },
      [x, y](long i) {
        std::vector<long> out;
        for (long k : x.row_support(i)) out = lazydetail::merge(out, y.row_support(k));
        return out;
      },
      [x, y](long j) {
        std::vector<long> out;
        for (long k : y.col_support(j)) out = lazydetail::merge(out, x.col_support(k));
        return out;
      });
}

// M_inf is an ideal of RCFM: products with a finite-support factor are
// finite-support.
template <class R>
GradedMatrix<R> mul_lazy_finite(const LazyMatrix<R>& x, const GradedMatrix<R>& y) {
  GradedMatrix<R> r(y.ring, y.spec);
  for (auto& [kj, v] : y.ent)
    for (long i : x.col_support(kj.first)) {
      auto prod = y.ring.mul(x.at(i, kj.first), v);
      if (!y.ring.is_zero(prod)) r.add_at(i, kj.second, prod);
    }
  return r;
}

template <class R>
GradedMatrix<R> mul_finite_lazy(const GradedMatrix<R>& x, const LazyMatrix<R>& y) {
  GradedMatrix<R> r(x.ring, x.spec);
  for (auto& [ik, v] : x.ent)
    for (long j : y.row_support(ik.second)) {
      auto prod = x.ring.mul(v, y.at(ik.second, j));
      if (!x.ring.is_zero(prod)) r.add_at(ik.first, j, prod);
    }
  return r;
}

// ---- windows ----

// Top-left N x N block. Entries of lazy matrices are computed exactly
// through the oracle (products carry their full inner sums), so a window is
// an exact finite verification surface, not an approximation.
template <class R>
GradedMatrix<R> window(const GradedMatrix<R>& x, long n) {
  GradedMatrix<R> r(x.ring, x.spec);
  for (auto& [ij, v] : x.ent)
    if (ij.first <= n && ij.second <= n) r.set(ij.first, ij.second, v);
  return r;
}

template <class R>
GradedMatrix<R> window(const LazyMatrix<R>& x, long n, const GradingSpec& spec) {
  GradedMatrix<R> r(x.ring(), spec);
  for (long i = 1; i <= n; ++i)
    for (long j : x.row_support(i)) {
      if (j > n) continue;
      auto v = x.at(i, j);
      if (!x.ring().is_zero(v)) r.set(i, j, std::move(v));
    }
  return r;
}

template <class R>
GradedMatrix<R> window(const LazyMatrix<R>& x, long n) {
  return window(x, n, GradingSpec::zero(x.ring().deg_dim()));
}

template <class R>
bool windows_equal(const LazyMatrix<R>& x, const LazyMatrix<R>& y, long n) {
  return gm_equal(window(x, n), window(y, n));
}

// e <= f for idempotents: ef = fe = e, checked on the window.
template <class R>
bool idem_leq_window(const LazyMatrix<R>& e, const LazyMatrix<R>& f, long n) {
  return windows_equal(lz_mul(e, f), e, n) && windows_equal(lz_mul(f, e), e, n);
}

// Spot audit of declared support bounds: entries outside them must be 0.
template <class R>
bool audit_lazy_support(const LazyMatrix<R>& x, std::mt19937_64& rng, int trials, long range) {
  for (int t = 0; t < trials; ++t) {
    long i = 1 + static_cast<long>(rng() % range);
    auto rs = x.row_support(i);
    long j = 1 + static_cast<long>(rng() % range);
    bool in = false;
    for (long k : rs)
      if (k == j) in = true;
    if (!in && !x.ring().is_zero(x.at(i, j))) return false;
  }
  return true;
}

// ---- reindexing isomorphisms ----

// A <-> e11 M_inf(A)[(delta)] e11; degree-preserving for any spec.
template <class R>
GradedMatrix<R> corner_e11_embed(const R& ring, const GradingSpec& spec, typename R::Elem a) {
  return gm_embed(ring, spec, std::move(a), 1, 1);
}

template <class R>
typename R::Elem corner_e11_extract(const GradedMatrix<R>& m) {
  for (auto& [ij, v] : m.ent)
    if (ij != std::make_pair(1L, 1L))
      throw MatrixError("corner_e11: support outside (1,1)");
  return m.at(1, 1);
}

// Lemma-style permutation reindexing: out(i,j) = x(pi(i), pi(j)), with the
// composed spec delta o pi; grade-preserving by construction.
template <class R>
GradedMatrix<R> permutation_iso(const GradedMatrix<R>& x, const IndexPerm& pi) {
  GradedMatrix<R> r(x.ring, x.spec.compose_perm(pi));
  for (auto& [ij, v] : x.ent) r.set(pi.inverse(ij.first), pi.inverse(ij.second), v);
  return r;
}

// ---- nested matrices and double stabilization ----

// Nonunital ring of finite-support matrices over R in the standard grading;
// the base ring for double-stabilization reindexing.
template <class R>
class MatRing {
 public:
  using Elem = GradedMatrix<R>;
  explicit MatRing(R inner) : inner_(std::move(inner)) {}
  const R& inner() const { return inner_; }

  Elem zero() const { return Elem(inner_, GradingSpec::zero(inner_.deg_dim())); }
  Elem add(const Elem& x, const Elem& y) const { return gm_add(x, y); }
  Elem sub(const Elem& x, const Elem& y) const { return gm_sub(x, y); }
  Elem neg(const Elem& x) const { return gm_neg(x); }
  Elem mul(const Elem& x, const Elem& y) const { return gm_mul(x, y); }
  bool is_zero(const Elem& x) const { return x.is_zero(); }
  bool equal(const Elem& x, const Elem& y) const { return gm_equal(x, y); }
  int deg_dim() const { return inner_.deg_dim(); }
  Elem component(const Elem& x, const Degree& d) const { return gm_component(x, d); }
  std::vector<Degree> elem_degrees(const Elem& x) const { return gm_degrees(x); }
  std::string to_text(const Elem& x) const {
    std::string s = "[";
    for (auto& [ij, v] : x.ent)
      s += "(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + "," +
           inner_.to_text(v) + ")";
    return s + "]";
  }

 private:
  R inner_;
};

// (a (x) e_{i,j}) (x) e_{k,l} -> a (x) e_{pi_k(i), pi_l(j)} for the modular
// partition S_k = {n == k mod K}, pi_k(i) = (i-1)K + k. The outer spec
// delta (indices <= K) turns into the periodic spec gamma with
// gamma_n = delta_k for n in S_k.
template <class R>
GradedMatrix<R> double_stab_forward(const GradedMatrix<MatRing<R>>& x, long K) {
  if (K < 1) throw MatrixError("double_stab: block count must be >= 1");
  std::vector<Degree> pat;
  for (long k = 1; k <= K; ++k) pat.push_back(x.spec.at(k));
  GradedMatrix<R> out(x.ring.inner(), GradingSpec::periodic(pat));
  for (auto& [kl, inner] : x.ent) {
    auto [k, l] = kl;
    if (k > K || l > K)
      throw MatrixError("double_stab: outer index exceeds the block count");
    for (auto& [ij, a] : inner.ent) {
      long r = (ij.first - 1) * K + k;
      long c = (ij.second - 1) * K + l;
      out.add_at(r, c, a);
    }
  }
  return out;
}

template <class R>
GradedMatrix<MatRing<R>> double_stab_backward(const GradedMatrix<R>& y, long K) {
  if (K < 1) throw MatrixError("double_stab: block count must be >= 1");
  std::vector<Degree> pat;
  for (long k = 1; k <= K; ++k) pat.push_back(y.spec.at(k));
  MatRing<R> ring(y.ring);
  GradedMatrix<MatRing<R>> out(ring, GradingSpec::periodic(pat));
  for (auto& [rc, a] : y.ent) {
    long k = (rc.first - 1) % K + 1, i = (rc.first - 1) / K + 1;
    long l = (rc.second - 1) % K + 1, j = (rc.second - 1) / K + 1;
    auto cell = out.at(k, l);
    cell.add_at(i, j, a);
    out.set(k, l, std::move(cell));
  }
  return out;
}

// HG4* transport: for a spec delta in which every value recurs infinitely
// often (constant or periodic), conjugates a standard-grading isomorphism
// M_inf(A)[(0)] -> M_inf(B)[(0)] into M_inf(A)[(delta)] -> M_inf(B)[(delta)]
// through double stabilization.
template <class RA, class RB>
GradedMatrix<RB> hg4_star_transport(
    const GradedMatrix<RA>& x, const RB& ring_b,
    const std::function<GradedMatrix<RB>(const GradedMatrix<RA>&)>& iso) {
  if (!x.spec.all_values_recur())
    throw MatrixError("hg4_star_transport: some delta value occurs only finitely often");
  if (x.spec.prefix_len() != 0)
    throw MatrixError("hg4_star_transport: spec must be constant or periodic");
  long K = x.spec.period();
  GradedMatrix<MatRing<RA>> nested = double_stab_backward(x, K);
  MatRing<RB> ring_nb(ring_b);
  GradedMatrix<MatRing<RB>> mapped(ring_nb, nested.spec);
  for (auto& [kl, inner] : nested.ent) mapped.set(kl.first, kl.second, iso(inner));
  GradedMatrix<RB> out = double_stab_forward(mapped, K);
  out.spec = x.spec;
  return out;
}

// ---- serialization ----

template <class R>
std::string gm_to_json(const GradedMatrix<R>& x) {
  nlohmann::json j;
  j["spec"] = nlohmann::json::parse(x.spec.to_json());
  j["entries"] = nlohmann::json::array();
  for (auto& [ij, v] : x.ent)
    j["entries"].push_back({ij.first, ij.second, x.ring.to_text(v)});
  return j.dump();
}

template <class R>
GradedMatrix<R> gm_from_json(const R& ring, const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  GradedMatrix<R> m(ring, GradingSpec::from_json(j.at("spec").dump()));
  for (auto& e : j.at("entries"))
    m.add_at(e.at(0).get<long>(), e.at(1).get<long>(),
             ring.parse_text(e.at(2).get<std::string>()));
  return m;
}

}  // namespace gradealg

#endif
