#ifndef GRADEALG_FIN_ALGEBRA_HPP
#define GRADEALG_FIN_ALGEBRA_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "gradealg/degree.hpp"
#include "gradealg/linalg.hpp"
#include "gradealg/scalar.hpp"

namespace gradealg {

struct AlgebraError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Element of a GradedAlgebra: sparse coordinates over the fixed basis.
struct AlgElem {
  std::map<int, Scalar> c;

  bool is_zero() const { return c.empty(); }
  bool operator==(const AlgElem& o) const;
  static AlgElem unit_coord(int i) { return AlgElem{{{i, Scalar(1)}}}; }
};

// Finite-dimensional Gamma-graded algebra over the configured exact field,
// given by a homogeneous basis and sparse structure constants. Construction
// verifies associativity on all basis triples, graded multiplicativity, and
// the declared unit.
class GradedAlgebra {
 public:
  // structure entries: (i, j, k, c) meaning b_i * b_j contains c * b_k.
  GradedAlgebra(std::vector<std::string> names, std::vector<Degree> degrees,
                std::vector<std::tuple<int, int, int, Scalar>> structure,
                std::optional<AlgElem> unit, bool validate = true);

  int dim() const { return static_cast<int>(names_.size()); }
  int deg_dim() const { return deg_dim_; }
  const std::string& name(int i) const { return names_[i]; }
  const Degree& degree(int i) const { return degrees_[i]; }
  const std::optional<AlgElem>& unit() const { return unit_; }
  AlgElem one() const;

  AlgElem zero() const { return AlgElem{}; }
  AlgElem basis(int i) const { return AlgElem::unit_coord(i); }
  AlgElem add(const AlgElem& x, const AlgElem& y) const;
  AlgElem sub(const AlgElem& x, const AlgElem& y) const;
  AlgElem neg(const AlgElem& x) const;
  AlgElem scalar_mul(const Scalar& c, const AlgElem& x) const;
  AlgElem mul(const AlgElem& x, const AlgElem& y) const;
  bool equal(const AlgElem& x, const AlgElem& y) const { return x == y; }
  bool is_zero(const AlgElem& x) const { return x.is_zero(); }

  AlgElem component(const AlgElem& x, const Degree& g) const;
  // The unique degree of a nonzero homogeneous element; nullopt for zero or
  // mixed elements.
  std::optional<Degree> homogeneous_degree(const AlgElem& x) const;
  std::vector<Degree> elem_degrees(const AlgElem& x) const;
  std::vector<Degree> occupied_degrees() const;
  std::vector<int> degree_block(const Degree& g) const;  // basis indices

  bool is_idempotent(const AlgElem& e) const;

  Vec to_vec(const AlgElem& x) const;
  AlgElem from_vec(const Vec& v) const;

  std::string elem_str(const AlgElem& x) const;
  // Parses "3/2*b1 + b2 - 1/3*b4" over basis names.
  AlgElem parse_elem(const std::string& s) const;

  std::string to_json() const;
  static GradedAlgebra from_json(const std::string& text);

 private:
  std::vector<std::string> names_;
  std::vector<Degree> degrees_;
  std::map<std::string, int> index_;
  // table_[i*dim+j] = sparse product of b_i b_j
  std::vector<std::vector<std::pair<int, Scalar>>> table_;
  std::optional<AlgElem> unit_;
  int deg_dim_ = 0;

  void validate_() const;
};

// ---- corners, ideals, fullness ----

// Corner eAe with the inherited grading; basis computed by reducing
// {e b_i e} per degree. unit of the corner is e.
struct CornerAlgebra {
  GradedAlgebra alg;
  std::vector<AlgElem> basis_ambient;        // corner basis as ambient elements
  AlgElem to_corner(const GradedAlgebra& A, const AlgElem& ambient) const;
  AlgElem to_ambient(const AlgElem& corner_elem) const;
};
CornerAlgebra corner(const GradedAlgebra& A, const AlgElem& e);

// Reduced basis of the two-sided ideal AeA (= span of {b_i e b_j}).
std::vector<AlgElem> two_sided_ideal(const GradedAlgebra& A, const AlgElem& e);
bool is_full(const GradedAlgebra& A, const AlgElem& e);

struct FullnessWitness {
  std::vector<std::pair<AlgElem, AlgElem>> pairs;  // sum x_i e y_i = 1
  int m() const { return static_cast<int>(pairs.size()); }
};
// Explicit witness for a full idempotent in a unital algebra; deterministic,
// with m greedy-minimal over the pivot order. Throws when e is not full.
FullnessWitness fullness_witness(const GradedAlgebra& A, const AlgElem& e);
bool verify_witness(const GradedAlgebra& A, const AlgElem& e, const FullnessWitness& w);

// ---- matrix algebras with suspension grading ----

// M_n(A)[(delta)]: basis b (x) e_{i,j}, degree deg(b) + delta_i - delta_j.
// The all-zero delta gives the standard grading.
GradedAlgebra matrix_algebra(const GradedAlgebra& A, int n, const std::vector<Degree>& delta);
// Basis index of b (x) e_{i,j} in matrix_algebra output (i, j are 1-based).
int matrix_unit_index(const GradedAlgebra& A, int n, int b, int i, int j);

// ---- zero components ----

struct SubAlgebra {
  GradedAlgebra alg;
  std::vector<int> ambient_index;  // sub basis i -> ambient basis index
  AlgElem restrict(const AlgElem& ambient) const;  // throws if outside
  AlgElem embed(const AlgElem& sub) const;
};
SubAlgebra zero_component(const GradedAlgebra& A);

// Number of simple blocks of a split semisimple algebra, computed as the
// dimension of the center. Throws AlgebraError when the trace-form radical
// is nonzero (non-semisimple input).
int block_count(const GradedAlgebra& A0);

// ---- strongly graded test ----

struct StronglyGradedReport {
  bool strongly = false;
  std::string reason;
};
// Exact test for A_g A_d = A_{g+d} over the algebra's declared Z^d group.
// A finite-dimensional nonzero algebra over an infinite group always fails;
// the report says which pair (or vanishing component) witnesses it.
StronglyGradedReport is_strongly_graded(const GradedAlgebra& A);

// ---- graded isomorphism search ----

struct IsoSearchResult {
  enum class Status { found, not_found, certified_negative };
  Status status = Status::not_found;
  // when found: basis map A -> B (a degree-preserving monomial isomorphism)
  std::vector<int> basis_map;
  std::string note;
};
// Bounded best-effort oracle. A negative is certified only by a per-degree
// dimension mismatch; "not_found" means the bounded search was exhausted.
// Throws when dim exceeds the budget.
IsoSearchResult graded_iso_search(const GradedAlgebra& A, const GradedAlgebra& B,
                                  int dim_budget = 16);

}  // namespace gradealg

#endif
