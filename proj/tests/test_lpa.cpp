#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gradealg/lpa.hpp"
#include "oracles.hpp"

using namespace gradealg;

namespace {
LpaAlgebra loop_alg() {
  return LpaAlgebra(
      load_graph(R"({"vertices":["v"],"edges":[{"name":"e","src":"v","tgt":"v"}]})"));
}
LpaAlgebra two_cycle_alg() {
  return LpaAlgebra(load_graph(
      R"({"vertices":["v","w"],"edges":[{"name":"e","src":"v","tgt":"w"},{"name":"f","src":"w","tgt":"v"}]})"));
}
LpaAlgebra rose2_alg() {
  return LpaAlgebra(load_graph(
      R"({"vertices":["v"],"edges":[{"name":"e","src":"v","tgt":"v"},{"name":"f","src":"v","tgt":"v"}]})"));
}
LpaAlgebra arrow_alg() {  // one edge v -> w
  return LpaAlgebra(load_graph(
      R"({"vertices":["v","w"],"edges":[{"name":"f","src":"v","tgt":"w"}]})"));
}
LpaAlgebra primitive2_alg() {
  return LpaAlgebra(load_graph(
      R"({"vertices":["1","2"],"edges":[{"name":"e","src":"1","tgt":"2"},{"name":"f","src":"2","tgt":"1"},{"name":"g","src":"2","tgt":"2"}]})"));
}

std::mt19937_64& rng() {
  static std::mt19937_64 r(20260809);
  return r;
}

LpaElem random_word(const LpaAlgebra& L, int max_len) {
  const Graph& g = L.graph();
  int len = 1 + static_cast<int>(rng()() % max_len);
  LpaElem acc = L.one();
  for (int i = 0; i < len; ++i) {
    switch (rng()() % 3) {
      case 0:
        acc = L.mul(acc, L.vertex(static_cast<int>(rng()() % g.num_vertices())));
        break;
      case 1:
        if (g.num_edges()) acc = L.mul(acc, L.edge(static_cast<int>(rng()() % g.num_edges())));
        break;
      default:
        if (g.num_edges()) acc = L.mul(acc, L.ghost(static_cast<int>(rng()() % g.num_edges())));
        break;
    }
  }
  return acc;
}

LpaElem random_elem(const LpaAlgebra& L, int terms, int max_len) {
  LpaElem acc;
  for (int i = 0; i < terms; ++i) {
    long c = static_cast<long>(rng()() % 5) - 2;
    acc = L.add(acc, L.scalar_mul(Scalar(c), random_word(L, max_len)));
  }
  return acc;
}

std::vector<Graph> random_small_graphs(int count) {
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    int nv = 1 + static_cast<int>(rng()() % 4);
    std::vector<std::string> verts;
    for (int i = 0; i < nv; ++i) verts.push_back("v" + std::to_string(i));
    int ne = 1 + static_cast<int>(rng()() % 6);
    std::vector<std::tuple<std::string, std::string, std::string>> edges;
    for (int i = 0; i < ne; ++i)
      edges.emplace_back("e" + std::to_string(i), verts[rng()() % nv], verts[rng()() % nv]);
    out.emplace_back(verts, edges);
  }
  return out;
}
}  // namespace

TEST_CASE("CK relations in normal form") {
  LpaAlgebra R = rose2_alg();
  // sum over emitted edges of ee* is the vertex
  LpaElem s = R.add(R.mul(R.edge(0), R.ghost(0)), R.mul(R.edge(1), R.ghost(1)));
  CHECK(s == R.vertex(0));
  CHECK(R.mul(R.ghost(0), R.edge(0)) == R.vertex(0));  // e*e = r(e)
  CHECK(R.mul(R.ghost(0), R.edge(1)).is_zero());       // e*f = 0

  LpaAlgebra E = loop_alg();
  CHECK(E.mul(E.edge(0), E.ghost(0)) == E.vertex(0));  // ee* = v via CK2
}

TEST_CASE("involution") {
  LpaAlgebra F = two_cycle_alg();
  // (e f'')... (mu nu*)* with mu=e, nu=f: f e*
  LpaElem x = F.mul(F.edge(0), F.ghost(1));  // e f*? e: v->w, f: w->v, ranges differ
  // e has range w, f has range v, so e.f' is zero; use paths with a common range
  CHECK(x.is_zero());
  LpaElem ef = F.mul(F.edge(0), F.edge(1));  // path e.f, range v
  LpaElem star = F.star(ef);
  CHECK(F.mul(star, ef) == F.vertex(0));  // (ef)*(ef) = v

  LpaAlgebra R = rose2_alg();
  LpaElem mnu = R.mul(R.edge(0), R.ghost(1));  // e f*
  CHECK(R.star(mnu) == R.mul(R.edge(1), R.ghost(0)));
  // mu mu* idempotent
  LpaElem mm = R.mul(R.edge(0), R.ghost(0));
  CHECK(R.mul(mm, mm) == mm);
  // orthogonal vertices
  LpaAlgebra F2 = two_cycle_alg();
  CHECK(F2.mul(F2.vertex(0), F2.vertex(1)).is_zero());
}

TEST_CASE("degree and components") {
  LpaAlgebra E = loop_alg();
  LpaElem e3 = E.mul(E.edge(0), E.mul(E.edge(0), E.edge(0)));
  LpaElem m = E.mul(e3, E.ghost(0));  // |mu|=3, |nu|=1
  CHECK(E.degree(m) == 2);
  CHECK(E.degree(E.vertex(0)) == 0);
  LpaElem mixed = E.add(E.edge(0), E.ghost(0));
  CHECK_FALSE(E.degree(mixed).has_value());
  CHECK(E.component(mixed, 1) == E.edge(0));
  CHECK(E.component(mixed, -1) == E.ghost(0));
  CHECK(E.component(mixed, 0).is_zero());
}

TEST_CASE("as_fin_algebra") {
  LpaAlgebra A = arrow_alg();
  LpaFinAlgebra fa = as_fin_algebra(A);
  CHECK(fa.alg.dim() == 4);
  CHECK(fa.alg.degree_block(Degree::z(0)).size() == 2);
  CHECK(fa.alg.degree_block(Degree::z(1)).size() == 1);
  CHECK(fa.alg.degree_block(Degree::z(-1)).size() == 1);

  LpaAlgebra single(load_graph(R"({"vertices":["v"],"edges":[]})"));
  CHECK(as_fin_algebra(single).alg.dim() == 1);

  CHECK_THROWS_AS(as_fin_algebra(loop_alg()), LpaError);
}

TEST_CASE("zero component truncations") {
  CHECK(zero_component_truncation(loop_alg(), 3).alg.dim() == 1);
  CHECK(zero_component_truncation(two_cycle_alg(), 2).alg.dim() == 2);
  LpaAlgebra g2(line_graph(2));
  LpaFinAlgebra t = zero_component_truncation(g2, 2);
  CHECK(t.alg.dim() == 3);
  CHECK(block_count(t.alg) == 3);
  // multiplicatively closed facet over a graph with cycles
  CHECK(zero_component_truncation(primitive2_alg(), 2).alg.dim() == 13);
}

TEST_CASE("corner truncated dimensions") {
  LpaAlgebra F = two_cycle_alg();
  int v = *F.graph().vertex_index("v");
  for (int n = 1; n <= 6; ++n) CHECK(corner_component_dim_truncated(F, v, 1, n) == 0);
  CHECK(corner_component_dim_truncated(F, v, 0, 2) >= 1);
  LpaAlgebra E = loop_alg();
  CHECK(corner_component_dim_truncated(E, 0, 1, 2) == 1);
  CHECK(ambient_component_dim_truncated(F, 1, 2) > 0);
}

TEST_CASE("fullness certificate for primitive graphs") {
  LpaAlgebra E = loop_alg();
  PrimitiveCertificate c = fullness_certificate_primitive(E, 0);
  CHECK(c.n == 1);
  REQUIRE(c.pairs.at(0).size() == 1);
  CHECK(c.pairs.at(0)[0].first.edges == std::vector<int>{0});
  CHECK(verify_primitive_certificate(E, c));

  LpaAlgebra R = rose2_alg();
  PrimitiveCertificate cr = fullness_certificate_primitive(R, 0);
  CHECK(cr.n == 1);
  CHECK(verify_primitive_certificate(R, cr));
  // witness sums to 1 with the vertex inserted
  auto w = witness_from_certificate(R, cr);
  LpaElem sum;
  for (auto& [x, y] : w) sum = R.add(sum, R.mul(x, R.mul(R.vertex(0), y)));
  CHECK(sum == R.one());

  CHECK_THROWS_AS(fullness_certificate_primitive(two_cycle_alg(), 0), LpaError);
}

TEST_CASE("primitive certificate on the two-vertex primitive graph") {
  LpaAlgebra P = primitive2_alg();
  PrimitiveCertificate c = fullness_certificate_primitive(P, 0);
  CHECK(c.n == 2);
  auto w = witness_from_certificate(P, c);
  CHECK(w.size() == 5);  // 2 length-2 paths from vertex 1, 3 from vertex 2
  LpaElem sum;
  for (auto& [x, y] : w) sum = P.add(sum, P.mul(x, P.mul(P.vertex(0), y)));
  CHECK(sum == P.one());
  for (auto& [x, y] : w) {
    CHECK(P.degree(x) == 0);
    CHECK(P.degree(y) == 0);
  }
}

TEST_CASE("confluence: associativity and idempotent normal forms") {
  for (const Graph& g : random_small_graphs(12)) {
    LpaAlgebra L(g);
    for (int t = 0; t < 12; ++t) {
      LpaElem x = random_elem(L, 2, 3), y = random_elem(L, 2, 3), z = random_elem(L, 2, 2);
      CHECK(L.mul(L.mul(x, y), z) == L.mul(x, L.mul(y, z)));
    }
  }
}

TEST_CASE("star is an involutive anti-automorphism") {
  for (const Graph& g : random_small_graphs(10)) {
    LpaAlgebra L(g);
    for (int t = 0; t < 10; ++t) {
      LpaElem x = random_elem(L, 2, 3), y = random_elem(L, 2, 3);
      CHECK(L.star(L.star(x)) == x);
      CHECK(L.star(L.mul(x, y)) == L.mul(L.star(y), L.star(x)));
    }
  }
}

TEST_CASE("grading multiplicativity of components") {
  for (const Graph& g : random_small_graphs(8)) {
    LpaAlgebra L(g);
    for (int t = 0; t < 8; ++t) {
      LpaElem x = random_elem(L, 2, 3), y = random_elem(L, 2, 3);
      for (long m : L.elem_degrees(x))
        for (long n : L.elem_degrees(y)) {
          LpaElem p = L.mul(L.component(x, m), L.component(y, n));
          for (long d : L.elem_degrees(p)) CHECK(d == m + n);
        }
    }
  }
}

TEST_CASE("CK relations hold on every graph") {
  for (const Graph& g : random_small_graphs(10)) {
    LpaAlgebra L(g);
    for (int e = 0; e < g.num_edges(); ++e) {
      CHECK(L.mul(L.ghost(e), L.edge(e)) == L.vertex(g.edge(e).tgt));
      for (int f = 0; f < g.num_edges(); ++f)
        if (f != e) CHECK(L.mul(L.ghost(e), L.edge(f)).is_zero());
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (g.out_edges(v).empty()) continue;
      LpaElem s;
      for (int e : g.out_edges(v)) s = L.add(s, L.mul(L.edge(e), L.ghost(e)));
      CHECK(s == L.vertex(v));
    }
  }
}

TEST_CASE("brute-force quotient oracle agrees on all small acyclic graphs") {
  auto graphs = oracles::small_acyclic_graphs(3);
  CHECK(graphs.size() > 100);
  for (const Graph& g : graphs) {
    long expect = oracles::lpa_dim_by_quotient(g);
    LpaAlgebra L(g);
    long got = 0;
    {
      int longest = 0;
      for (int v = 0; v < g.num_vertices(); ++v)
        longest = std::max(longest, max_path_length_to(g, v));
      got = static_cast<long>(reduced_monomials(L, longest).size());
    }
    CHECK(got == expect);
  }
}

TEST_CASE("element text round trip") {
  LpaAlgebra P = primitive2_alg();
  LpaElem x = P.parse("3/2*e.g.g' + 1*1 - 2");
  CHECK_FALSE(x.is_zero());
  // e g g* rewrites through CK2 at the designated edge g
  CHECK(P.parse("e.g.g'") == P.sub(P.edge(0), P.parse("e.f.f'")));
  CHECK(P.parse(P.str(x)) == x);
  LpaElem y = P.parse("e.f");
  CHECK(P.degree(y) == 2);
  CHECK_THROWS_AS(P.parse("q.w"), LpaError);
  // non-composable juxtaposition normalizes to 0, not an error
  CHECK(P.parse("e.e").is_zero());
  for (const Graph& g : random_small_graphs(6)) {
    LpaAlgebra L(g);
    for (int t = 0; t < 6; ++t) {
      LpaElem e = random_elem(L, 3, 3);
      CHECK(L.parse(L.str(e)) == e);
    }
  }
}
