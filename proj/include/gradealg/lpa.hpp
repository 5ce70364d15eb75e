#ifndef GRADEALG_LPA_HPP
#define GRADEALG_LPA_HPP

#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradealg/fin_algebra.hpp"
#include "gradealg/graph.hpp"
#include "gradealg/scalar.hpp"

namespace gradealg {

struct LpaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Reduced monomial lam * mu^star with range(lam) = range(mu). Reducedness:
// lam and mu do not both end in the CK2-designated edge of that edge's
// source (the last out-edge in declaration order), unless empty.
struct LpaMono {
  GPath lam, mu;
  bool operator==(const LpaMono& o) const { return lam == o.lam && mu == o.mu; }
  bool operator<(const LpaMono& o) const {
    if (!(lam == o.lam)) return lam < o.lam;
    return mu < o.mu;
  }
};

// Linear combination of reduced monomials, always held in normal form.
struct LpaElem {
  std::map<LpaMono, Scalar> t;
  bool is_zero() const { return t.empty(); }
  bool operator==(const LpaElem& o) const { return t == o.t; }
};

// Leavitt path algebra of a finite graph with the usual Z-grading by
// deg(lam mu*) = |lam| - |mu|. The per-vertex CK2 edge enumeration is the
// declaration order of out-edges; the last one is eliminated.
class LpaAlgebra {
 public:
  explicit LpaAlgebra(Graph g) : g_(std::move(g)) {}
  const Graph& graph() const { return g_; }

  LpaElem zero() const { return {}; }
  LpaElem one() const;  // sum of vertices
  LpaElem vertex(int v) const;
  LpaElem edge(int e) const;
  LpaElem ghost(int e) const;
  LpaElem monomial(const GPath& lam, const GPath& mu) const;  // normalizes

  LpaElem add(const LpaElem& x, const LpaElem& y) const;
  LpaElem sub(const LpaElem& x, const LpaElem& y) const;
  LpaElem neg(const LpaElem& x) const;
  LpaElem scalar_mul(const Scalar& c, const LpaElem& x) const;
  LpaElem mul(const LpaElem& x, const LpaElem& y) const;
  LpaElem star(const LpaElem& x) const;
  bool equal(const LpaElem& x, const LpaElem& y) const { return x == y; }
  bool is_zero(const LpaElem& x) const { return x.is_zero(); }

  std::optional<long> degree(const LpaElem& x) const;
  LpaElem component(const LpaElem& x, long n) const;
  std::vector<long> elem_degrees(const LpaElem& x) const;

  // The CK2-eliminated (last declared) out-edge of a non-sink vertex.
  int designated_edge(int v) const;

  // Element text: terms like "3/2*e.f.g'" where "'" marks a ghost edge and
  // "." concatenates generators (vertices, edges, ghosts). Parser and
  // printer round-trip through normal form.
  std::string str(const LpaElem& x) const;
  LpaElem parse(const std::string& s) const;

 private:
  Graph g_;
  bool mono_nonreduced_(const LpaMono& m) const;
  void add_reduced_(std::map<LpaMono, Scalar>& acc, LpaMono m, Scalar c) const;
};

// Reduced monomials with |lam|, |mu| <= len_bound, optionally filtered by
// degree |lam|-|mu| and by the sources of lam and mu. Deterministic order.
std::vector<LpaMono> reduced_monomials(const LpaAlgebra& L, int len_bound,
                                       std::optional<long> deg = std::nullopt,
                                       std::optional<int> lam_src = std::nullopt,
                                       std::optional<int> mu_src = std::nullopt);

// A finite-dimensional facet of L as a structure-constant algebra together
// with the monomial basis and coordinate maps.
struct LpaFinAlgebra {
  GradedAlgebra alg;
  std::vector<LpaMono> basis;
  const LpaAlgebra* L = nullptr;
  AlgElem to_coords(const LpaElem& x) const;   // throws if outside the span
  LpaElem from_coords(const AlgElem& x) const;
};

// Whole algebra of an acyclic graph (throws on cycles); Z-graded.
LpaFinAlgebra as_fin_algebra(const LpaAlgebra& L);

// Length-<= n filtration term of the zero component; degree-0 concentrated
// and closed under multiplication. For acyclic graphs it equals L_0 once
// n reaches the longest path length.
LpaFinAlgebra zero_component_truncation(const LpaAlgebra& L, int n);

// Corner vLv support: truncated dimension of its degree-k part
// (monomials with s(lam) = s(mu) = v, |lam| - |mu| = k, lengths <= n).
long corner_component_dim_truncated(const LpaAlgebra& L, int v, long k, int n);
long ambient_component_dim_truncated(const LpaAlgebra& L, long k, int n);
// vxv
LpaElem corner_project(const LpaAlgebra& L, int v, const LpaElem& x);

// Fullness certificate of Corollary-style primitivity: n = primitivity
// length; for each vertex w, each length-n path mu from w is paired with a
// companion nu from v with r(nu) = r(mu), so w = sum (mu nu*)(nu mu*).
struct PrimitiveCertificate {
  int n = 0;
  int v = 0;
  std::map<int, std::vector<std::pair<GPath, GPath>>> pairs;  // by vertex w
};
PrimitiveCertificate fullness_certificate_primitive(const LpaAlgebra& L, int v);
bool verify_primitive_certificate(const LpaAlgebra& L, const PrimitiveCertificate& cert);
// Witness pairs (x, y) with sum x v y = 1, all of degree 0.
std::vector<std::pair<LpaElem, LpaElem>> witness_from_certificate(
    const LpaAlgebra& L, const PrimitiveCertificate& cert);

}  // namespace gradealg

#endif
