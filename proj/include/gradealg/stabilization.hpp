#ifndef GRADEALG_STABILIZATION_HPP
#define GRADEALG_STABILIZATION_HPP

#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gradealg/matinf.hpp"

namespace gradealg {

struct StabError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// u, v with uvu = u and vuv = v, so uv and vu are idempotents. The defining
// identities are checked on a window at construction.
template <class R>
struct IsoPair {
  LazyMatrix<R> u, v;
};

template <class R>
struct StabWitness {
  // sum_i x_i p y_i = 1 in the base ring
  std::vector<std::pair<typename R::Elem, typename R::Elem>> pairs;
  long m() const { return static_cast<long>(pairs.size()); }
};

template <class R>
bool check_stab_witness(const R& ring, const typename R::Elem& p, const StabWitness<R>& w) {
  auto sum = ring.zero();
  for (auto& [x, y] : w.pairs) sum = ring.add(sum, ring.mul(x, ring.mul(p, y)));
  return ring.equal(sum, ring.one());
}

template <class R>
bool verify_isopair(const IsoPair<R>& pr, long window) {
  return windows_equal(lz_mul(pr.u, lz_mul(pr.v, pr.u)), pr.u, window) &&
         windows_equal(lz_mul(pr.v, lz_mul(pr.u, pr.v)), pr.v, window);
}

// u = sum p (x) e_{s_i, t_i}, v = sum p (x) e_{t_i, s_i} over the matched
// enumerations of S and T; uv = p (x) 1_S, vu = p (x) 1_T.
template <class R>
IsoPair<R> make_equiv_pair(const R& ring, const typename R::Elem& p, const IndexSet& S,
                           const IndexSet& T, long check_window = 8) {
  if (S.is_finite() != T.is_finite() || (S.is_finite() && S.size() != T.size()))
    throw StabError("make_equiv_pair: |S| != |T|");
  auto pp = std::make_shared<typename R::Elem>(p);
  auto Sp = std::make_shared<IndexSet>(S);
  auto Tp = std::make_shared<IndexSet>(T);
  R r = ring;
  LazyMatrix<R> u(
      ring,
      [r, pp, Sp, Tp](long i, long j) {
        if (Sp->contains(i) && Tp->contains(j) && Tp->index_of(j) == Sp->index_of(i))
          return *pp;
        return r.zero();
      },
      [Sp, Tp](long i) {
        return Sp->contains(i) ? std::vector<long>{Tp->at(Sp->index_of(i))}
                               : std::vector<long>{};
      },
      [Sp, Tp](long j) {
        return Tp->contains(j) ? std::vector<long>{Sp->at(Tp->index_of(j))}
                               : std::vector<long>{};
      });
  LazyMatrix<R> v(
      ring,
      [r, pp, Sp, Tp](long i, long j) {
        if (Tp->contains(i) && Sp->contains(j) && Sp->index_of(j) == Tp->index_of(i))
          return *pp;
        return r.zero();
      },
      [Sp, Tp](long i) {
        return Tp->contains(i) ? std::vector<long>{Sp->at(Tp->index_of(i))}
                               : std::vector<long>{};
      },
      [Sp, Tp](long j) {
        return Sp->contains(j) ? std::vector<long>{Tp->at(Sp->index_of(j))}
                               : std::vector<long>{};
      });
  IsoPair<R> pr{std::move(u), std::move(v)};
  if (!verify_isopair(pr, check_window))
    throw StabError("make_equiv_pair: identities fail (internal)");
  return pr;
}

// w = u, z = vuv; requires uv idempotent p with pu = u and vu in eAe. Then
// wzw = w, zwz = z, wz = p, zw <= e.
template <class R>
IsoPair<R> reduce_pair(const LazyMatrix<R>& u, const LazyMatrix<R>& v, const LazyMatrix<R>& e,
                       long check_window = 8) {
  auto p = lz_mul(u, v);
  if (!windows_equal(lz_mul(p, u), u, check_window))
    throw StabError("reduce_pair: pu != u on the check window");
  auto vu = lz_mul(v, u);
  if (!windows_equal(lz_mul(e, lz_mul(vu, e)), vu, check_window))
    throw StabError("reduce_pair: vu is not in eAe on the check window");
  IsoPair<R> pr{u, lz_mul(v, lz_mul(u, v))};
  if (!verify_isopair(pr, check_window)) throw StabError("reduce_pair: identities fail");
  return pr;
}

// From a fullness witness: w z = 1 (x) e_{1,1} and zw <= sum_{i<=m} p (x) e_{i,i}.
template <class R>
std::pair<long, IsoPair<R>> unit_corner_pair(const R& ring, const typename R::Elem& p,
                                             const StabWitness<R>& wit, long check_window = 0) {
  if (!check_stab_witness(ring, p, wit))
    throw StabError("unit_corner_pair: witness fails sum x_i p y_i = 1");
  long m = wit.m();
  if (check_window == 0) check_window = m + 2;
  GradingSpec z0 = GradingSpec::zero(ring.deg_dim());
  GradedMatrix<R> u(ring, z0), v(ring, z0);
  for (long i = 1; i <= m; ++i) {
    u.add_at(1, i, ring.mul(wit.pairs[i - 1].first, p));
    v.add_at(i, 1, ring.mul(p, wit.pairs[i - 1].second));
  }
  auto e = lz_indicator(ring, p, IndexSet::range(1, m));
  auto pr = reduce_pair(lz_from_finite(u), lz_from_finite(v), e, check_window);
  return {m, std::move(pr)};
}

// Second half of the corner lemma: w' = u1 w u2, z' = v2 z v1 with
// w'z' = 1 (x) e_{j,j} and z'w' <= p (x) 1_S, |S| = m.
template <class R>
IsoPair<R> unit_corner_pair_at(const R& ring, const typename R::Elem& p,
                               const StabWitness<R>& wit, long j, const IndexSet& S,
                               long check_window = 0) {
  auto [m, base] = unit_corner_pair(ring, p, wit, check_window);
  if (!S.is_finite() || S.size() != m)
    throw StabError("unit_corner_pair_at: |S| != m");
  if (check_window == 0) check_window = std::max(j, S.at(m)) + 2;
  auto e1 = make_equiv_pair(ring, ring.one(), IndexSet::single(j), IndexSet::single(1));
  auto e2 = make_equiv_pair(ring, p, IndexSet::range(1, m), S);
  IsoPair<R> pr{lz_mul(e1.u, lz_mul(base.u, e2.u)), lz_mul(e2.v, lz_mul(base.v, e1.v))};
  if (!verify_isopair(pr, check_window))
    throw StabError("unit_corner_pair_at: identities fail (internal)");
  return pr;
}

// Infinite form: w z = 1 (x) 1_S and zw <= p (x) 1_S for an infinite S.
// Per-index corner pairs target the disjoint blocks S_j = {mj-m+1..mj} and
// are glued through an equivalence between their union and S.
template <class R>
IsoPair<R> infinite_pair(const R& ring, const typename R::Elem& p, const StabWitness<R>& wit,
                         const IndexSet& S, long check_window = 12) {
  if (S.is_finite()) throw StabError("infinite_pair needs an infinite index set");
  if (!check_stab_witness(ring, p, wit))
    throw StabError("infinite_pair: witness fails sum x_i p y_i = 1");
  long m = wit.m();
  // finite base pair, materialized once
  auto [m2, base] = unit_corner_pair(ring, p, wit);
  GradedMatrix<R> wf = window(base.u, m + 1);
  GradedMatrix<R> zf = window(base.v, m + 1);
  // per-j corner pairs w_j = u1 w u2, z_j = v2 z v1 in closed finite form,
  // built on demand
  struct Cache {
    std::map<long, std::pair<GradedMatrix<R>, GradedMatrix<R>>> by_j;
    std::mutex mtx;
  };
  auto cache = std::make_shared<Cache>();
  auto wfp = std::make_shared<GradedMatrix<R>>(std::move(wf));
  auto zfp = std::make_shared<GradedMatrix<R>>(std::move(zf));
  R r = ring;
  auto pp = std::make_shared<typename R::Elem>(p);
  GradingSpec z0 = GradingSpec::zero(ring.deg_dim());
  auto pair_for = [r, cache, wfp, zfp, pp, m, z0](long j) {
    std::lock_guard<std::mutex> lk(cache->mtx);
    auto it = cache->by_j.find(j);
    if (it != cache->by_j.end()) return it->second;
    // u1 = 1 (x) e_{j,1}, u2 = sum_i p (x) e_{i, (j-1)m+i}; w_j = u1 w u2
    GradedMatrix<R> wj(r, z0), zj(r, z0);
    for (long i = 1; i <= m; ++i) {
      long col = (j - 1) * m + i;
      // (u1 w u2)(j, col) = w(1, i) p ; (v2 z v1)(col, j) = p z(i, 1)
      auto wv = r.mul(wfp->at(1, i), *pp);
      if (!r.is_zero(wv)) wj.set(j, col, std::move(wv));
      auto zv = r.mul(*pp, zfp->at(i, 1));
      if (!r.is_zero(zv)) zj.set(col, j, std::move(zv));
    }
    auto res = std::make_pair(std::move(wj), std::move(zj));
    cache->by_j.emplace(j, res);
    return res;
  };
  auto Sp = std::make_shared<IndexSet>(S);
  LazyMatrix<R> u(
      ring,
      [r, Sp, pair_for](long i, long j) {
        if (!Sp->contains(i)) return r.zero();
        return pair_for(i).first.at(i, j);
      },
      [Sp, m](long i) {
        std::vector<long> out;
        if (Sp->contains(i))
          for (long s = 1; s <= m; ++s) out.push_back((i - 1) * m + s);
        return out;
      },
      [Sp, m](long c) {
        long j = (c - 1) / m + 1;
        return Sp->contains(j) ? std::vector<long>{j} : std::vector<long>{};
      });
  LazyMatrix<R> v(
      ring,
      [r, Sp, pair_for](long i, long j) {
        if (!Sp->contains(j)) return r.zero();
        return pair_for(j).second.at(i, j);
      },
      [Sp, m](long i) {
        long j = (i - 1) / m + 1;
        return Sp->contains(j) ? std::vector<long>{j} : std::vector<long>{};
      },
      [Sp, m](long c) {
        std::vector<long> out;
        if (Sp->contains(c))
          for (long s = 1; s <= m; ++s) out.push_back((c - 1) * m + s);
        return out;
      });
  IndexSet X = IndexSet::blocks(S, m);
  auto glue = make_equiv_pair(ring, p, X, S, check_window);
  IsoPair<R> pr{lz_mul(u, glue.u), lz_mul(glue.v, v)};
  if (!verify_isopair(pr, check_window)) throw StabError("infinite_pair: identities fail");
  return pr;
}

// ---- Brown sequence ----

// The inductive data realizing the stabilization isomorphism: sequences
// u_i, v_i over the partition N_i = {n == i mod K}, with
//   u_{2n-1} = (1 (x) 1_{N_n} - u_{2n-2} v_{2n-2}) s_n
//   u_{2n}   = w_n (p (x) 1_{N_n} - v_{2n-1} u_{2n-1})
// (s_n, t_n an infinite pair at N_n; w_n, z_n an equivalence N_{n+1} ~ N_n).
template <class R>
struct BrownData {
  using Elem = typename R::Elem;
  R ring;
  Elem p;
  StabWitness<R> witness;
  int K = 0, n_max = 0;
  std::vector<IndexSet> N;         // N[i-1] = block i, 1-based blocks
  std::vector<LazyMatrix<R>> u, v; // u[i-1] = u_i, i = 1..2*n_max
  std::vector<LazyMatrix<R>> w_, z_;  // partial sums, w_[n-1] = w_n

  int block_of(long i) const { return static_cast<int>((i - 1) % K) + 1; }
  const LazyMatrix<R>& w(int n) const { return w_.at(n - 1); }
  const LazyMatrix<R>& z(int n) const { return z_.at(n - 1); }
  LazyMatrix<R> Q(int n) const {
    R r = ring;
    int k = K;
    auto one = std::make_shared<Elem>(ring.one());
    return LazyMatrix<R>(
        ring,
        [r, one, n, k](long i, long j) {
          return (i == j && (i - 1) % k + 1 <= n) ? *one : r.zero();
        },
        [n, k](long i) {
          return ((i - 1) % k + 1 <= n) ? std::vector<long>{i} : std::vector<long>{};
        },
        [n, k](long j) {
          return ((j - 1) % k + 1 <= n) ? std::vector<long>{j} : std::vector<long>{};
        });
  }
  LazyMatrix<R> P(int n) const {
    R r = ring;
    int k = K;
    auto pe = std::make_shared<Elem>(p);
    return LazyMatrix<R>(
        ring,
        [r, pe, n, k](long i, long j) {
          return (i == j && (i - 1) % k + 1 <= n) ? *pe : r.zero();
        },
        [n, k](long i) {
          return ((i - 1) % k + 1 <= n) ? std::vector<long>{i} : std::vector<long>{};
        },
        [n, k](long j) {
          return ((j - 1) % k + 1 <= n) ? std::vector<long>{j} : std::vector<long>{};
        });
  }
};

template <class R>
BrownData<R> brown_sequence(const R& ring, const typename R::Elem& p,
                            const StabWitness<R>& wit, int n_max, long check_window = 12) {
  if (n_max < 1) throw StabError("brown_sequence: depth must be >= 1");
  if (!check_stab_witness(ring, p, wit))
    throw StabError("brown_sequence: witness fails sum x_i p y_i = 1");
  BrownData<R> d{ring, p, wit};
  d.K = n_max + 1;
  d.n_max = n_max;
  for (int i = 1; i <= d.K; ++i) d.N.push_back(IndexSet::arithmetic(i, d.K));
  auto one = ring.one();
  for (int n = 1; n <= n_max; ++n) {
    auto [s, t] = infinite_pair(ring, p, wit, d.N[n - 1], check_window);
    LazyMatrix<R> ind1 = lz_indicator(ring, one, d.N[n - 1]);
    LazyMatrix<R> indp = lz_indicator(ring, p, d.N[n - 1]);
    LazyMatrix<R> defect =
        n == 1 ? ind1 : lz_sub(ind1, lz_mul(d.u[2 * n - 3], d.v[2 * n - 3]));
    d.u.push_back(lz_mul(defect, s));
    d.v.push_back(lz_mul(t, defect));
    auto eq = make_equiv_pair(ring, p, d.N[n], d.N[n - 1], check_window);
    LazyMatrix<R> defect2 =
        lz_sub(indp, lz_mul(d.v[2 * n - 2], d.u[2 * n - 2]));
    d.u.push_back(lz_mul(eq.u, defect2));
    d.v.push_back(lz_mul(defect2, eq.v));
  }
  for (int n = 1; n <= 2 * n_max; ++n) {
    d.w_.push_back(n == 1 ? d.u[0] : lz_add(d.w_[n - 2], d.u[n - 1]));
    d.z_.push_back(n == 1 ? d.v[0] : lz_add(d.z_[n - 2], d.v[n - 1]));
  }
  return d;
}

// phi(x) = v x u for x in (uv) A (uv); multiplicative, additive, and graded
// when u, v are degree-0.
template <class R>
GradedMatrix<R> corner_transport(const LazyMatrix<R>& u, const LazyMatrix<R>& v,
                                 const GradedMatrix<R>& x) {
  auto p = lz_mul(u, v);
  GradedMatrix<R> pxp = mul_finite_lazy(mul_lazy_finite(p, x), p);
  if (!gm_equal(pxp, x)) throw StabError("corner_transport: x is not in the corner pAp");
  return mul_finite_lazy(mul_lazy_finite(v, x), u);
}

// Forward/backward evaluators of the stabilization isomorphism
// M_inf(A) ~ M_inf(pAp): forward(x) = z_{2n-1} x w_{2n-1} for the least n
// with Q_n x Q_n = x; backward(y) = w_{2n} y z_{2n}.
template <class R>
class StabIso {
 public:
  explicit StabIso(BrownData<R> data) : d_(std::move(data)) {}
  const BrownData<R>& data() const { return d_; }

  int required_depth(const GradedMatrix<R>& x) const {
    int n = 1;
    for (auto& [ij, e] : x.ent)
      n = std::max({n, d_.block_of(ij.first), d_.block_of(ij.second)});
    return n;
  }

  GradedMatrix<R> forward(const GradedMatrix<R>& x) const {
    int n = required_depth(x);
    if (n > d_.n_max)
      throw StabError("stab_iso: support exceeds depth; need n = " + std::to_string(n));
    return mul_finite_lazy(mul_lazy_finite(d_.z(2 * n - 1), x), d_.w(2 * n - 1));
  }

  GradedMatrix<R> backward(const GradedMatrix<R>& y) const {
    int n = required_depth(y);
    if (n > d_.n_max)
      throw StabError("stab_iso: support exceeds depth; need n = " + std::to_string(n));
    // the domain is the P_n corner: entries lie in pAp
    for (auto& [ij, e] : y.ent) {
      auto pep = d_.ring.mul(d_.p, d_.ring.mul(e, d_.p));
      if (!d_.ring.equal(pep, e))
        throw StabError("stab_iso: backward input is not over pAp");
    }
    return mul_finite_lazy(mul_lazy_finite(d_.w(2 * n), y), d_.z(2 * n));
  }

 private:
  BrownData<R> d_;
};

template <class R>
StabIso<R> stab_iso(const R& ring, const typename R::Elem& p, const StabWitness<R>& wit,
                    int n_max, long check_window = 12) {
  return StabIso<R>(brown_sequence(ring, p, wit, n_max, check_window));
}

// ---- verification report ----

struct CheckResult {
  std::string identity;
  long window = 0;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  std::string to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (auto& c : checks) {
      nlohmann::json j{{"identity", c.identity},
                       {"window", c.window},
                       {"status", c.pass ? "pass" : "fail"}};
      if (!c.detail.empty()) j["counterexample"] = c.detail;
      arr.push_back(j);
    }
    return arr.dump(2);
  }
};

namespace stabdetail {
template <class R>
std::string diff_detail(const R& ring, const GradedMatrix<R>& a, const GradedMatrix<R>& b) {
  for (auto& [ij, v] : a.ent) {
    auto w = b.at(ij.first, ij.second);
    if (!ring.equal(v, w))
      return "(" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
             ") expected " + ring.to_text(w) + " got " + ring.to_text(v);
  }
  for (auto& [ij, w] : b.ent) {
    auto v = a.at(ij.first, ij.second);
    if (!ring.equal(v, w))
      return "(" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
             ") expected " + ring.to_text(w) + " got " + ring.to_text(v);
  }
  return "";
}
}  // namespace stabdetail

// Full identity suite for a Brown construction: the four displayed sum
// relations, mutual orthogonality, the ten w/z identities, the round trips
// psi_n phi_n = i_n and phi_{n+1} psi_n = j_n on seeded samples, and grade
// preservation of the forward map. corrupt_u2 deliberately damages u_2
// first (a negative control; the report must then contain failures).
template <class R>
VerifyReport verify_stabilization(const R& ring, const typename R::Elem& p,
                                  const StabWitness<R>& wit, int n_max, long win,
                                  int samples, std::mt19937_64& rng,
                                  bool corrupt_u2 = false) {
  VerifyReport rep;
  auto add = [&](const std::string& name, long w, bool pass, std::string detail = "") {
    rep.checks.push_back(CheckResult{name, w, pass, std::move(detail)});
  };
  if (!check_stab_witness(ring, p, wit)) {
    add("witness: sum x_i p y_i = 1", 0, false);
    return rep;
  }
  add("witness: sum x_i p y_i = 1", 0, true);
  BrownData<R> d = brown_sequence(ring, p, wit, n_max, std::min<long>(win, 12));
  if (corrupt_u2 && d.u.size() >= 2) {
    // negative control: damage u_2 so orthogonality/sum identities fail
    d.u[1] = lz_add(d.u[1], d.u[0]);
    for (int n = 2; n <= 2 * n_max; ++n) {
      d.w_[n - 1] = lz_add(d.w_[n - 2], d.u[n - 1]);
      d.z_[n - 1] = lz_add(d.z_[n - 2], d.v[n - 1]);
    }
  }
  auto eqchk = [&](const std::string& name, const LazyMatrix<R>& a, const LazyMatrix<R>& b) {
    auto wa = window(a, win), wb = window(b, win);
    bool ok = gm_equal(wa, wb);
    add(name, win, ok, ok ? "" : stabdetail::diff_detail(ring, wa, wb));
  };
  auto leqchk = [&](const std::string& name, const LazyMatrix<R>& e, const LazyMatrix<R>& f) {
    bool ok = idem_leq_window(e, f, win);
    add(name, win, ok);
  };
  // thm:brown displayed relations
  for (int n = 1; n <= n_max; ++n) {
    LazyMatrix<R> uvsum = lz_mul(d.u[0], d.v[0]);
    for (int i = 2; i <= 2 * n - 1; ++i) uvsum = lz_add(uvsum, lz_mul(d.u[i - 1], d.v[i - 1]));
    eqchk("sum_{i<=2n-1} u_i v_i = Q_n (n=" + std::to_string(n) + ")", uvsum, d.Q(n));
    uvsum = lz_add(uvsum, lz_mul(d.u[2 * n - 1], d.v[2 * n - 1]));
    leqchk("sum_{i<=2n} u_i v_i <= Q_{n+1} (n=" + std::to_string(n) + ")", uvsum, d.Q(n + 1));
    LazyMatrix<R> vusum = lz_mul(d.v[0], d.u[0]);
    for (int i = 2; i <= 2 * n - 1; ++i) vusum = lz_add(vusum, lz_mul(d.v[i - 1], d.u[i - 1]));
    leqchk("sum_{i<=2n-1} v_i u_i <= P_n (n=" + std::to_string(n) + ")", vusum, d.P(n));
    vusum = lz_add(vusum, lz_mul(d.v[2 * n - 1], d.u[2 * n - 1]));
    eqchk("sum_{i<=2n} v_i u_i = P_n (n=" + std::to_string(n) + ")", vusum, d.P(n));
  }
  // mutual orthogonality
  {
    bool ok_uv = true, ok_vu = true;
    std::string duv, dvu;
    for (int i = 1; i <= 2 * n_max && (ok_uv || ok_vu); ++i)
      for (int j = 1; j <= 2 * n_max; ++j) {
        if (i == j) continue;
        auto uvi = lz_mul(d.u[i - 1], d.v[i - 1]);
        auto uvj = lz_mul(d.u[j - 1], d.v[j - 1]);
        if (!window(lz_mul(uvi, uvj), win).is_zero()) {
          ok_uv = false;
          duv = "u_i v_i family at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
        auto vui = lz_mul(d.v[i - 1], d.u[i - 1]);
        auto vuj = lz_mul(d.v[j - 1], d.u[j - 1]);
        if (!window(lz_mul(vui, vuj), win).is_zero()) {
          ok_vu = false;
          dvu = "v_i u_i family at (" + std::to_string(i) + "," + std::to_string(j) + ")";
        }
      }
    add("{u_i v_i} mutually orthogonal", win, ok_uv, duv);
    add("{v_i u_i} mutually orthogonal", win, ok_vu, dvu);
  }
  // ten w/z identities
  for (int n = 1; n <= 2 * n_max; ++n) {
    eqchk("w_n z_n w_n = w_n (n=" + std::to_string(n) + ")",
          lz_mul(d.w(n), lz_mul(d.z(n), d.w(n))), d.w(n));
    eqchk("z_n w_n z_n = z_n (n=" + std::to_string(n) + ")",
          lz_mul(d.z(n), lz_mul(d.w(n), d.z(n))), d.z(n));
  }
  for (int n = 1; n + 1 <= 2 * n_max; ++n) {
    eqchk("w_{n+1} z_n = w_n z_n (n=" + std::to_string(n) + ")",
          lz_mul(d.w(n + 1), d.z(n)), lz_mul(d.w(n), d.z(n)));
    eqchk("w_n z_{n+1} = w_n z_n (n=" + std::to_string(n) + ")",
          lz_mul(d.w(n), d.z(n + 1)), lz_mul(d.w(n), d.z(n)));
    eqchk("z_{n+1} w_n = z_n w_n (n=" + std::to_string(n) + ")",
          lz_mul(d.z(n + 1), d.w(n)), lz_mul(d.z(n), d.w(n)));
    eqchk("z_n w_{n+1} = z_n w_n (n=" + std::to_string(n) + ")",
          lz_mul(d.z(n), d.w(n + 1)), lz_mul(d.z(n), d.w(n)));
  }
  for (int n = 1; n <= n_max; ++n) {
    eqchk("w_{2n-1} z_{2n-1} = Q_n (n=" + std::to_string(n) + ")",
          lz_mul(d.w(2 * n - 1), d.z(2 * n - 1)), d.Q(n));
    eqchk("z_{2n} w_{2n} = P_n (n=" + std::to_string(n) + ")",
          lz_mul(d.z(2 * n), d.w(2 * n)), d.P(n));
    leqchk("z_{2n-1} w_{2n-1} <= P_n (n=" + std::to_string(n) + ")",
           lz_mul(d.z(2 * n - 1), d.w(2 * n - 1)), d.P(n));
    leqchk("w_{2n} z_{2n} <= Q_{n+1} (n=" + std::to_string(n) + ")",
           lz_mul(d.w(2 * n), d.z(2 * n)), d.Q(n + 1));
  }
  // Q_n <= Q_{n+1}, P_n <= P_{n+1}
  for (int n = 1; n < d.K; ++n) {
    leqchk("Q_n <= Q_{n+1} (n=" + std::to_string(n) + ")", d.Q(n), d.Q(n + 1));
    leqchk("P_n <= P_{n+1} (n=" + std::to_string(n) + ")", d.P(n), d.P(n + 1));
  }
  // round trips and grading on samples
  StabIso<R> iso(d);
  GradingSpec z0 = GradingSpec::zero(ring.deg_dim());
  bool rt_fwd = true, rt_bwd = true, graded = true;
  std::string rt_fwd_d, rt_bwd_d, graded_d;
  for (int s = 0; s < samples; ++s) {
    int n = 1 + static_cast<int>(rng() % n_max);
    // x with Q_n x Q_n = x: support over indices with block <= n
    GradedMatrix<R> x(ring, z0);
    for (int t = 0; t < 3; ++t) {
      long bi = 1 + static_cast<long>(rng() % n), qi = static_cast<long>(rng() % 3);
      long bj = 1 + static_cast<long>(rng() % n), qj = static_cast<long>(rng() % 3);
      x.add_at(qi * d.K + bi, qj * d.K + bj, ring.random_elem(rng));
    }
    auto y = iso.forward(x);
    auto back = iso.backward(y);
    if (!gm_equal(back, x)) {
      rt_fwd = false;
      rt_fwd_d = "sample " + std::to_string(s);
    }
    // y in the P_n corner, entries p.r.p; psi_n lands in the Q_{n+1} corner,
    // so the sample depth stays below n_max
    if (n_max >= 2) {
      int nb = 1 + static_cast<int>(rng() % (n_max - 1));
      GradedMatrix<R> yc(ring, z0);
      for (int t = 0; t < 3; ++t) {
        long bi = 1 + static_cast<long>(rng() % nb), qi = static_cast<long>(rng() % 3);
        long bj = 1 + static_cast<long>(rng() % nb), qj = static_cast<long>(rng() % 3);
        yc.add_at(qi * d.K + bi, qj * d.K + bj,
                  ring.mul(p, ring.mul(ring.random_elem(rng), p)));
      }
      auto lifted = iso.backward(yc);
      auto again = iso.forward(lifted);
      if (!gm_equal(again, yc)) {
        rt_bwd = false;
        rt_bwd_d = "sample " + std::to_string(s);
      }
    }
    // homogeneous sample: one homogeneous element scattered
    auto h = ring.random_homogeneous(rng);
    if (!ring.is_zero(h)) {
      GradedMatrix<R> hx(ring, z0);
      for (int t = 0; t < 2; ++t)
        hx.add_at(1 + static_cast<long>(rng() % (2 * d.K)),
                  1 + static_cast<long>(rng() % (2 * d.K)), h);
      if (!hx.is_zero() && iso.required_depth(hx) <= n_max) {
        auto hdegs = gm_degrees(hx);
        auto fdegs = gm_degrees(iso.forward(hx));
        for (const Degree& fd : fdegs) {
          bool found = false;
          for (const Degree& hd : hdegs)
            if (fd == hd) found = true;
          if (!found) {
            graded = false;
            graded_d = "degree " + fd.str() + " appeared";
          }
        }
      }
    }
  }
  add("psi_n phi_n = i_n on samples", win, rt_fwd, rt_fwd_d);
  add("phi_{n+1} psi_n = j_n on samples", win, rt_bwd, rt_bwd_d);
  add("stab_iso forward preserves homogeneous degree", win, graded, graded_d);
  return rep;
}

}  // namespace gradealg

#endif
