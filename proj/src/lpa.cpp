#include "gradealg/lpa.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace gradealg {

namespace {
// all paths of length exactly n, grouped helper
void extend_paths(const Graph& g, std::vector<GPath>& acc, GPath& p, int remaining) {
  if (remaining == 0) {
    acc.push_back(p);
    return;
  }
  for (int e : g.out_edges(p.range(g))) {
    p.edges.push_back(e);
    extend_paths(g, acc, p, remaining - 1);
    p.edges.pop_back();
  }
}

std::vector<GPath> all_paths_up_to(const Graph& g, int n) {
  std::vector<GPath> out;
  for (int len = 0; len <= n; ++len)
    for (int v = 0; v < g.num_vertices(); ++v) {
      GPath p{v, {}};
      extend_paths(g, out, p, len);
    }
  return out;
}
}  // namespace

int LpaAlgebra::designated_edge(int v) const {
  const auto& out = g_.out_edges(v);
  if (out.empty()) throw LpaError("sink has no designated edge");
  return out.back();
}

bool LpaAlgebra::mono_nonreduced_(const LpaMono& m) const {
  if (m.lam.edges.empty() || m.mu.edges.empty()) return false;
  int e = m.lam.edges.back();
  if (e != m.mu.edges.back()) return false;
  return e == designated_edge(g_.edge(e).src);
}

// CK2-reduce a monomial and accumulate it (the only pattern in a monomial
// is at the junction: lam and mu ending in the same designated edge).
void LpaAlgebra::add_reduced_(std::map<LpaMono, Scalar>& acc, LpaMono m, Scalar c) const {
  if (c.is_zero()) return;
  if (!mono_nonreduced_(m)) {
    auto it = acc.find(m);
    if (it == acc.end()) {
      acc.emplace(std::move(m), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) acc.erase(it);
    }
    return;
  }
  int e = m.lam.edges.back();
  int v = g_.edge(e).src;
  GPath lam0 = m.lam, mu0 = m.mu;
  lam0.edges.pop_back();
  mu0.edges.pop_back();
  // lam0 (e e*) mu0* = lam0 mu0* - sum_{i<last} (lam0 e_i)(mu0 e_i)*
  add_reduced_(acc, LpaMono{lam0, mu0}, c);
  const auto& out = g_.out_edges(v);
  for (size_t i = 0; i + 1 < out.size(); ++i) {
    GPath l = lam0, r = mu0;
    l.edges.push_back(out[i]);
    r.edges.push_back(out[i]);
    // both end in the same non-designated edge: already reduced
    auto it = acc.find(LpaMono{l, r});
    Scalar v2 = -c;
    if (it == acc.end()) {
      acc.emplace(LpaMono{std::move(l), std::move(r)}, v2);
    } else {
      it->second += v2;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

LpaElem LpaAlgebra::vertex(int v) const {
  if (v < 0 || v >= g_.num_vertices()) throw LpaError("unknown vertex index");
  LpaElem r;
  r.t.emplace(LpaMono{GPath{v, {}}, GPath{v, {}}}, Scalar(1));
  return r;
}

LpaElem LpaAlgebra::one() const {
  LpaElem r;
  for (int v = 0; v < g_.num_vertices(); ++v)
    r.t.emplace(LpaMono{GPath{v, {}}, GPath{v, {}}}, Scalar(1));
  return r;
}

LpaElem LpaAlgebra::edge(int e) const {
  if (e < 0 || e >= g_.num_edges()) throw LpaError("unknown edge index");
  int t = g_.edge(e).tgt;
  LpaElem r;
  r.t.emplace(LpaMono{GPath{g_.edge(e).src, {e}}, GPath{t, {}}}, Scalar(1));
  return r;
}

LpaElem LpaAlgebra::ghost(int e) const {
  if (e < 0 || e >= g_.num_edges()) throw LpaError("unknown edge index");
  int t = g_.edge(e).tgt;
  LpaElem r;
  r.t.emplace(LpaMono{GPath{t, {}}, GPath{g_.edge(e).src, {e}}}, Scalar(1));
  return r;
}

LpaElem LpaAlgebra::monomial(const GPath& lam, const GPath& mu) const {
  if (lam.range(g_) != mu.range(g_)) throw LpaError("monomial ranges differ");
  LpaElem r;
  add_reduced_(r.t, LpaMono{lam, mu}, Scalar(1));
  return r;
}

LpaElem LpaAlgebra::add(const LpaElem& x, const LpaElem& y) const {
  LpaElem r = x;
  for (auto& [m, c] : y.t) {
    auto it = r.t.find(m);
    if (it == r.t.end()) {
      r.t.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.t.erase(it);
    }
  }
  return r;
}

LpaElem LpaAlgebra::sub(const LpaElem& x, const LpaElem& y) const { return add(x, neg(y)); }

LpaElem LpaAlgebra::neg(const LpaElem& x) const {
  LpaElem r = x;
  for (auto& [m, c] : r.t) c = -c;
  return r;
}

LpaElem LpaAlgebra::scalar_mul(const Scalar& c, const LpaElem& x) const {
  if (c.is_zero()) return {};
  LpaElem r = x;
  for (auto& [m, cc] : r.t) cc *= c;
  return r;
}

LpaElem LpaAlgebra::mul(const LpaElem& x, const LpaElem& y) const {
  LpaElem r;
  for (auto& [a, ca] : x.t)
    for (auto& [b, cb] : y.t) {
      // (lam mu*)(alpha beta*): compare mu with alpha as prefix/extension.
      const GPath& mu = a.mu;
      const GPath& alpha = b.lam;
      Scalar c = ca * cb;
      if (alpha.edges.size() >= mu.edges.size()) {
        // alpha = mu tau ?
        if (alpha.src != mu.src) continue;
        if (!std::equal(mu.edges.begin(), mu.edges.end(), alpha.edges.begin())) continue;
        GPath lam = a.lam;
        lam.edges.insert(lam.edges.end(), alpha.edges.begin() + mu.edges.size(),
                         alpha.edges.end());
        add_reduced_(r.t, LpaMono{std::move(lam), b.mu}, c);
      } else {
        // mu = alpha tau with tau nonempty ?
        if (mu.src != alpha.src) continue;
        if (!std::equal(alpha.edges.begin(), alpha.edges.end(), mu.edges.begin())) continue;
        GPath nu = b.mu;
        nu.edges.insert(nu.edges.end(), mu.edges.begin() + alpha.edges.size(), mu.edges.end());
        add_reduced_(r.t, LpaMono{a.lam, std::move(nu)}, c);
      }
    }
  return r;
}

LpaElem LpaAlgebra::star(const LpaElem& x) const {
  LpaElem r;
  for (auto& [m, c] : x.t) r.t.emplace(LpaMono{m.mu, m.lam}, c);
  return r;
}

std::optional<long> LpaAlgebra::degree(const LpaElem& x) const {
  std::optional<long> d;
  for (auto& [m, c] : x.t) {
    long dm = m.lam.length() - m.mu.length();
    if (!d) {
      d = dm;
    } else if (*d != dm) {
      return std::nullopt;
    }
  }
  return x.is_zero() ? std::nullopt : d;
}

LpaElem LpaAlgebra::component(const LpaElem& x, long n) const {
  LpaElem r;
  for (auto& [m, c] : x.t)
    if (m.lam.length() - m.mu.length() == n) r.t.emplace(m, c);
  return r;
}

std::vector<long> LpaAlgebra::elem_degrees(const LpaElem& x) const {
  std::set<long> s;
  for (auto& [m, c] : x.t) s.insert(m.lam.length() - m.mu.length());
  return {s.begin(), s.end()};
}

std::string LpaAlgebra::str(const LpaElem& x) const {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& [m, c] : x.t) {
    std::string cs = c.str();
    bool negated = !cs.empty() && cs[0] == '-';
    if (first) {
      if (negated) s += "-";
    } else {
      s += negated ? " - " : " + ";
    }
    if (negated) cs = cs.substr(1);
    std::string word;
    if (m.lam.edges.empty() && m.mu.edges.empty()) {
      word = g_.vertex_name(m.lam.src);
    } else {
      for (int e : m.lam.edges) {
        if (!word.empty()) word += ".";
        word += g_.edge(e).name;
      }
      for (auto it = m.mu.edges.rbegin(); it != m.mu.edges.rend(); ++it) {
        if (!word.empty()) word += ".";
        word += g_.edge(*it).name + "'";
      }
    }
    if (cs != "1") s += cs + "*";
    s += word;
    first = false;
  }
  return s;
}

LpaElem LpaAlgebra::parse(const std::string& s) const {
  LpaElem result;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip_ws();
  if (pos == s.size()) return result;
  if (s.substr(pos) == "0" && !g_.vertex_index("0") && !g_.edge_index("0")) return result;
  bool first = true;
  while (pos < s.size()) {
    skip_ws();
    if (pos == s.size()) break;
    Scalar sign(1);
    if (s[pos] == '+') {
      ++pos;
    } else if (s[pos] == '-') {
      sign = Scalar(-1);
      ++pos;
    } else if (!first) {
      throw LpaError("expected +/- in element text near: " + s.substr(pos));
    }
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && !isspace(static_cast<unsigned char>(s[pos])) && s[pos] != '+' &&
           s[pos] != '-')
      ++pos;
    std::string term = s.substr(start, pos - start);
    if (term.empty()) throw LpaError("empty term in element text");
    Scalar coeff(1);
    std::string word = term;
    size_t star = term.find('*');
    if (star != std::string::npos) {
      auto c = Scalar::parse(term.substr(0, star));
      if (!c) throw LpaError("bad coefficient: " + term.substr(0, star));
      coeff = *c;
      word = term.substr(star + 1);
    }
    // word := atom ('.' atom)*, atom := name ["'"]
    LpaElem w;
    bool have = false;
    size_t wpos = 0;
    while (wpos <= word.size()) {
      size_t dot = word.find('.', wpos);
      std::string atom = word.substr(wpos, dot == std::string::npos ? dot : dot - wpos);
      if (atom.empty()) throw LpaError("empty atom in word: " + word);
      bool ghosted = atom.back() == '\'';
      if (ghosted) atom.pop_back();
      LpaElem gen;
      if (auto v = g_.vertex_index(atom)) {
        if (ghosted) throw LpaError("vertices have no ghost: " + atom);
        gen = vertex(*v);
      } else if (auto e = g_.edge_index(atom)) {
        gen = ghosted ? ghost(*e) : edge(*e);
      } else {
        throw LpaError("unknown vertex/edge name: " + atom);
      }
      w = have ? mul(w, gen) : gen;
      have = true;
      if (dot == std::string::npos) break;
      wpos = dot + 1;
    }
    result = add(result, scalar_mul(sign * coeff, w));
    first = false;
  }
  return result;
}

std::vector<LpaMono> reduced_monomials(const LpaAlgebra& L, int len_bound,
                                       std::optional<long> deg, std::optional<int> lam_src,
                                       std::optional<int> mu_src) {
  const Graph& g = L.graph();
  auto paths = all_paths_up_to(g, len_bound);
  // group by range
  std::map<int, std::vector<const GPath*>> by_range;
  for (const auto& p : paths) by_range[p.range(g)].push_back(&p);
  std::vector<LpaMono> out;
  for (auto& [rng, ps] : by_range)
    for (const GPath* lp : ps)
      for (const GPath* mp : ps) {
        if (deg && lp->length() - mp->length() != *deg) continue;
        if (lam_src && lp->src != *lam_src) continue;
        if (mu_src && mp->src != *mu_src) continue;
        LpaMono m{*lp, *mp};
        // skip non-reduced monomials (both ending in the designated edge)
        if (!lp->edges.empty() && !mp->edges.empty() &&
            lp->edges.back() == mp->edges.back()) {
          int e = lp->edges.back();
          const auto& outs = g.out_edges(g.edge(e).src);
          if (e == outs.back()) continue;
        }
        out.push_back(std::move(m));
      }
  std::sort(out.begin(), out.end());
  return out;
}

AlgElem LpaFinAlgebra::to_coords(const LpaElem& x) const {
  AlgElem r;
  for (auto& [m, c] : x.t) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || !(*it == m))
      throw LpaError("element is outside the finite facet");
    r.c.emplace(static_cast<int>(it - basis.begin()), c);
  }
  return r;
}

LpaElem LpaFinAlgebra::from_coords(const AlgElem& x) const {
  LpaElem r;
  for (auto& [i, c] : x.c) r.t.emplace(basis[i], c);
  return r;
}

namespace {
LpaFinAlgebra build_fin(const LpaAlgebra& L, std::vector<LpaMono> basis, bool z_graded) {
  const Graph& g = L.graph();
  std::map<LpaMono, int> index;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) index.emplace(basis[i], i);
  std::vector<std::string> names;
  std::vector<Degree> degs;
  for (const auto& m : basis) {
    std::string nm;
    if (m.lam.edges.empty() && m.mu.edges.empty()) {
      nm = g.vertex_name(m.lam.src);
    } else {
      for (int e : m.lam.edges) {
        if (!nm.empty()) nm += ".";
        nm += g.edge(e).name;
      }
      for (auto it = m.mu.edges.rbegin(); it != m.mu.edges.rend(); ++it) {
        if (!nm.empty()) nm += ".";
        nm += g.edge(*it).name + "'";
      }
    }
    names.push_back(nm);
    degs.push_back(Degree::z(z_graded ? m.lam.length() - m.mu.length() : 0));
  }
  std::vector<std::tuple<int, int, int, Scalar>> structure;
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
    LpaElem bi;
    bi.t.emplace(basis[i], Scalar(1));
    for (int j = 0; j < static_cast<int>(basis.size()); ++j) {
      LpaElem bj;
      bj.t.emplace(basis[j], Scalar(1));
      LpaElem prod = L.mul(bi, bj);
      for (auto& [m, c] : prod.t) {
        auto it = index.find(m);
        if (it == index.end())
          throw LpaError("facet is not multiplicatively closed (internal)");
        structure.emplace_back(i, j, it->second, c);
      }
    }
  }
  AlgElem unit;
  LpaElem one = L.one();
  for (auto& [m, c] : one.t) {
    auto it = index.find(m);
    if (it == index.end()) throw LpaError("facet does not contain the unit (internal)");
    unit.c.emplace(it->second, c);
  }
  LpaFinAlgebra out{GradedAlgebra(std::move(names), std::move(degs), std::move(structure),
                                  AlgElem{unit}),
                    std::move(basis), &L};
  return out;
}
}  // namespace

LpaFinAlgebra as_fin_algebra(const LpaAlgebra& L) {
  const Graph& g = L.graph();
  if (!is_acyclic(g)) throw LpaError("as_fin_algebra needs an acyclic graph");
  int longest = 0;
  for (int v = 0; v < g.num_vertices(); ++v)
    longest = std::max(longest, max_path_length_to(g, v));
  return build_fin(L, reduced_monomials(L, longest), /*z_graded=*/true);
}

LpaFinAlgebra zero_component_truncation(const LpaAlgebra& L, int n) {
  if (n < 0) throw LpaError("negative truncation bound");
  return build_fin(L, reduced_monomials(L, n, 0L), /*z_graded=*/false);
}

long corner_component_dim_truncated(const LpaAlgebra& L, int v, long k, int n) {
  if (v < 0 || v >= L.graph().num_vertices()) throw LpaError("unknown vertex index");
  return static_cast<long>(reduced_monomials(L, n, k, v, v).size());
}

long ambient_component_dim_truncated(const LpaAlgebra& L, long k, int n) {
  return static_cast<long>(reduced_monomials(L, n, k).size());
}

LpaElem corner_project(const LpaAlgebra& L, int v, const LpaElem& x) {
  LpaElem vx = L.mul(L.vertex(v), x);
  return L.mul(vx, L.vertex(v));
}

PrimitiveCertificate fullness_certificate_primitive(const LpaAlgebra& L, int v) {
  const Graph& g = L.graph();
  if (v < 0 || v >= g.num_vertices()) throw LpaError("unknown vertex index");
  auto n = primitivity_length(g);
  if (!n) throw LpaError("graph is not primitive");
  PrimitiveCertificate cert;
  cert.n = *n;
  cert.v = v;
  for (int w = 0; w < g.num_vertices(); ++w) {
    std::vector<std::pair<GPath, GPath>> ps;
    for (const GPath& mu : paths_of_length(g, *n, w)) {
      auto nus = paths_of_length(g, *n, v, mu.range(g));
      if (nus.empty()) throw LpaError("primitivity violated (internal)");
      ps.emplace_back(mu, nus.front());
    }
    cert.pairs.emplace(w, std::move(ps));
  }
  if (!verify_primitive_certificate(L, cert))
    throw LpaError("primitive certificate failed verification (internal)");
  return cert;
}

bool verify_primitive_certificate(const LpaAlgebra& L, const PrimitiveCertificate& cert) {
  const Graph& g = L.graph();
  for (auto& [w, ps] : cert.pairs) {
    LpaElem sum;
    for (auto& [mu, nu] : ps) {
      if (mu.length() != cert.n || nu.length() != cert.n) return false;
      if (nu.src != cert.v || mu.range(g) != nu.range(g)) return false;
      LpaElem x = L.monomial(mu, nu);   // mu nu*, degree 0
      LpaElem xs = L.monomial(nu, mu);  // nu mu*, passes through v
      sum = L.add(sum, L.mul(x, xs));
    }
    if (!(sum == L.vertex(w))) return false;
  }
  return true;
}

std::vector<std::pair<LpaElem, LpaElem>> witness_from_certificate(
    const LpaAlgebra& L, const PrimitiveCertificate& cert) {
  std::vector<std::pair<LpaElem, LpaElem>> out;
  for (auto& [w, ps] : cert.pairs)
    for (auto& [mu, nu] : ps) out.emplace_back(L.monomial(mu, nu), L.monomial(nu, mu));
  return out;
}

}  // namespace gradealg
