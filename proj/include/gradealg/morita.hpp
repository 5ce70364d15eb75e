#ifndef GRADEALG_MORITA_HPP
#define GRADEALG_MORITA_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gradealg/fin_algebra.hpp"
#include "gradealg/graph.hpp"
#include "gradealg/lpa.hpp"

namespace gradealg {

struct MoritaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graded bimodule with explicit action tensors: a finite homogeneous basis,
// a left action of the first algebra and a right action of the second.
struct Bimodule {
  int dim = 0;
  std::vector<Degree> degrees;
  std::vector<std::string> names;
  // left[a][m] / right[b][m]: sparse coordinates of the acted element
  std::vector<std::vector<AlgElem>> left, right;

  std::vector<int> degree_block(const Degree& g) const;
};

// Surjective Morita context (A, B, M, N, psi, phi): psi: M (x) N -> A,
// phi: N (x) M -> B, with the compatibility axioms. Homogeneity flags
// record whether the degree-0 restrictions are surjective onto A_0 / B_0.
struct MoritaContext {
  GradedAlgebra A, B;
  Bimodule M;  // A-M-B
  Bimodule N;  // B-N-A
  std::vector<std::vector<AlgElem>> psi;  // psi[m][n] in A coordinates
  std::vector<std::vector<AlgElem>> phi;  // phi[n][m] in B coordinates

  bool psi_surjective = false, phi_surjective = false;
  bool psi0_surjective = false, phi0_surjective = false;

  // context axioms phi(n (x) m) n' = n psi(m (x) n') and
  // m' phi(n (x) m) = psi(m' (x) n) m, on sampled coordinate triples
  bool check_axioms(std::mt19937_64& rng, int samples) const;
};

// The corner context (eAe, A, eA, Ae, xy, yx) of a degree-0 idempotent.
// psi0 surjectivity always holds for unital A; phi0 surjectivity holds
// exactly when e is full in A_0.
MoritaContext corner_context(const GradedAlgebra& A, const AlgElem& e);

// Composite of contexts between (A,B) and (B,C): bimodules M (x)_B X and
// Y (x)_B N as quotients of the formal tensor spans, with
// mu((m(x)x)(x)(y(x)n)) = psi(m (x) beta(x(x)y) n).
MoritaContext compose_contexts(const MoritaContext& c1, const MoritaContext& c2);

// The 2x2 Morita ring [[A, M],[N, B]] with p = diag(1_A, 0), q = diag(0, 1_B).
struct MoritaRing {
  GradedAlgebra L;
  AlgElem p, q;
  bool p_full_in_L0 = false, q_full_in_L0 = false;
  int a_off = 0, m_off = 0, n_off = 0, b_off = 0;
};
MoritaRing morita_ring(const MoritaContext& c);

// ---- decision procedures ----

struct EquivalenceVerdict {
  enum class Status { equivalent, not_equivalent, undetermined };
  Status status = Status::undetermined;
  std::string criterion;
  std::string values;
  std::string certificate;
  std::string to_json() const;
  std::string status_str() const;
};

// Acyclic single-sink criterion: homogeneously graded equivalent iff the
// longest path lengths into the sinks agree. Throws on precondition
// violations (cycles or sink count != 1).
EquivalenceVerdict decide_hge_acyclic_single_sink(const Graph& E, const Graph& F);

struct ZeroComponentObstruction {
  int blocks_E = 0, blocks_F = 0;
  bool certified = false;  // both truncations provably equal the full L_0
  std::string note;
};
// Compares semisimple block counts of the truncated zero components;
// nullopt when they agree. Certified only under an exact structural
// argument (acyclicity with a sufficient bound, or unique-entry/exit
// cycles where L_0 is just the vertex span).
std::optional<ZeroComponentObstruction> hge_obstruction_zero_component(const Graph& E,
                                                                       const Graph& F,
                                                                       int trunc);

struct GeHgeCertificate {
  bool coincide = false;
  std::string reason;
};
// Graded equivalence and homogeneously graded equivalence coincide for
// Leavitt path algebras of finite graphs with no sinks (strong grading).
GeHgeCertificate ge_equals_hge_certificate(const Graph& E);

struct CornerDegreeReport {
  long corner_dim = 0;       // truncated dim of (vLv)_k
  long ambient_dim = 0;      // truncated dim of L_k
  bool corner_vanishing_certified = false;
  std::optional<std::string> obstruction;
};
// The corner-component obstruction pattern: (vLv)_k = 0 against L_k != 0.
// Vanishing is certified by exhaustive enumeration for acyclic graphs and
// by the cycle-period potential argument otherwise.
CornerDegreeReport hge_obstruction_corner_degree(const Graph& E, int v, long k, int trunc);

// Combined decision used by the CLI: the acyclic single-sink criterion when
// it applies, else a certified zero-component obstruction scan, else
// undetermined.
EquivalenceVerdict decide_hge(const Graph& E, const Graph& F, int trunc);

}  // namespace gradealg

#endif
