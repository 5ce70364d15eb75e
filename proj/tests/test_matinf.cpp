#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gradealg/matinf.hpp"
#include "gradealg/rings.hpp"

using namespace gradealg;

namespace {
GradedAlgebra field_K() {
  return GradedAlgebra({"1"}, {Degree::z(0)}, {{0, 0, 0, Scalar(1)}}, AlgElem::unit_coord(0));
}
GradedAlgebra m2_remark() { return matrix_algebra(field_K(), 2, {Degree::z(1), Degree::z(0)}); }

std::mt19937_64& rng() {
  static std::mt19937_64 r(99);
  return r;
}

template <class R>
GradedMatrix<R> random_matrix(const R& ring, const GradingSpec& spec, long max_idx,
                              int entries) {
  GradedMatrix<R> m(ring, spec);
  for (int t = 0; t < entries; ++t)
    m.add_at(1 + static_cast<long>(rng()() % max_idx), 1 + static_cast<long>(rng()() % max_idx),
             ring.random_elem(rng()));
  return m;
}
}  // namespace

TEST_CASE("index sets") {
  IndexSet f = IndexSet::finite({3, 1, 7});
  CHECK(f.size() == 3);
  CHECK(f.at(2) == 3);
  CHECK(f.index_of(7) == 3);
  CHECK_FALSE(f.contains(2));
  IndexSet evens = IndexSet::arithmetic(2, 2);
  CHECK_FALSE(evens.is_finite());
  CHECK(evens.contains(8));
  CHECK_FALSE(evens.contains(7));
  CHECK(evens.at(4) == 8);
  CHECK(evens.index_of(8) == 4);
  CHECK(evens.up_to(7) == std::vector<long>{2, 4, 6});
  IndexSet blk = IndexSet::blocks(IndexSet::arithmetic(1, 2), 3);  // blocks of odd j
  CHECK(blk.contains(1));   // j=1 block {1,2,3}
  CHECK(blk.contains(3));
  CHECK_FALSE(blk.contains(4));  // j=2 block excluded
  CHECK(blk.contains(7));        // j=3 block {7,8,9}
  CHECK(blk.at(4) == 7);
  CHECK(blk.index_of(8) == 5);
}

TEST_CASE("index permutations") {
  IndexPerm id = IndexPerm::identity();
  CHECK(id.apply(5) == 5);
  IndexPerm swap12 = IndexPerm::finite({{1, 2}, {2, 1}});
  CHECK(swap12.apply(1) == 2);
  CHECK(swap12.apply(3) == 3);
  CHECK(swap12.inverse(2) == 1);
  CHECK_THROWS_AS(IndexPerm::finite({{1, 2}}), IndexError);
  IndexPerm blk = IndexPerm::blockwise(3, {2, 3, 1});
  CHECK(blk.apply(1) == 2);
  CHECK(blk.apply(3) == 1);
  CHECK(blk.apply(4) == 5);  // next block
  CHECK(blk.inverse(blk.apply(11)) == 11);
}

TEST_CASE("grading specs") {
  GradingSpec z = GradingSpec::zero(1);
  CHECK(z.is_zero());
  GradingSpec alt = GradingSpec::periodic({Degree::z(0), Degree::z(1)});
  CHECK(alt.at(1) == Degree::z(0));
  CHECK(alt.at(4) == Degree::z(1));
  GradingSpec lst = GradingSpec::list({Degree::z(5)}, Degree::z(1));
  CHECK(lst.at(1) == Degree::z(5));
  CHECK(lst.at(2) == Degree::z(1));
  CHECK(lst.at(100) == Degree::z(1));
  // semantic equality across representations
  GradingSpec c1 = GradingSpec::constant(Degree::z(1));
  GradingSpec c2 = GradingSpec::periodic({Degree::z(1), Degree::z(1)});
  CHECK(c1 == c2);
  CHECK(alt != c1);
  CHECK(alt.all_values_recur());
  CHECK_FALSE(lst.all_values_recur());
  // prefix absorption keeps values
  GradingSpec ep = GradingSpec::eventually_periodic({Degree::z(0)},
                                                    {Degree::z(1), Degree::z(0)});
  for (long n = 1; n <= 9; ++n)
    CHECK(ep.at(n) == (n % 2 == 1 ? Degree::z(0) : Degree::z(1)));
  CHECK(GradingSpec::from_json(alt.to_json()) == alt);
  CHECK(GradingSpec::from_json(lst.to_json()) == lst);
}

TEST_CASE("matrix units and products") {
  GradedAlgebra A = m2_remark();
  FinRing ring(&A);
  GradingSpec z0 = GradingSpec::zero(1);
  auto a = ring.random_elem(rng());
  auto b = ring.random_elem(rng());
  auto m1 = gm_embed(ring, z0, a, 1, 2);
  auto m2 = gm_embed(ring, z0, b, 2, 3);
  auto m3 = gm_embed(ring, z0, b, 3, 4);
  CHECK(gm_equal(gm_mul(m1, m2), gm_embed(ring, z0, ring.mul(a, b), 1, 3)));
  CHECK(gm_mul(m1, m3).is_zero());
}

TEST_CASE("indicator products intersect index sets") {
  GradedAlgebra A = m2_remark();
  FinRing ring(&A);
  AlgElem p = A.basis(0);  // e[1,1], idempotent
  auto s = lz_indicator(ring, p, IndexSet::arithmetic(1, 2));
  auto t = lz_indicator(ring, p, IndexSet::arithmetic(1, 3));
  auto prod = lz_mul(s, t);
  // intersection {1,7,13,...}
  for (long i = 1; i <= 15; ++i) {
    bool in = (i % 2 == 1) && (i % 3 == 1);
    CHECK(ring.is_zero(prod.at(i, i)) == !in);
  }
}

TEST_CASE("grading of matrices with suspension specs") {
  GradedAlgebra A = field_K();
  FinRing ring(&A);
  // standard grading: degree of a (x) e_{ij} is deg(a) = 0
  auto e12 = gm_embed(ring, GradingSpec::zero(1), A.one(), 1, 2);
  CHECK(gm_degree_of(e12) == Degree::z(0));
  // delta = (0,1,0,1,...): a (x) e_{1,2} sits in grade -1
  GradingSpec alt = GradingSpec::periodic({Degree::z(0), Degree::z(1)});
  auto m = gm_embed(ring, alt, A.one(), 1, 2);
  CHECK(gm_degree_of(m) == Degree::z(-1));
  CHECK(gm_component(m, Degree::z(-1)).ent.size() == 1);
  CHECK(gm_component(m, Degree::z(0)).is_zero());
  // component decomposition is exhaustive
  GradedAlgebra R2 = m2_remark();
  FinRing ring2(&R2);
  auto x = random_matrix(ring2, alt, 6, 5);
  GradedMatrix<FinRing> sum(ring2, alt);
  for (const Degree& d : gm_degrees(x)) sum = gm_add(sum, gm_component(x, d));
  CHECK(gm_equal(sum, x));
}

TEST_CASE("corner e11") {
  GradedAlgebra A = m2_remark();
  FinRing ring(&A);
  GradingSpec alt = GradingSpec::periodic({Degree::z(0), Degree::z(1)});
  auto a = ring.random_elem(rng());
  auto m = corner_e11_embed(ring, alt, a);
  CHECK(ring.equal(corner_e11_extract(m), a));
  CHECK_THROWS_AS(corner_e11_extract(gm_embed(ring, alt, A.one(), 2, 2)), MatrixError);
  // degree preserved both ways for any spec
  auto h = ring.random_homogeneous(rng());
  if (!ring.is_zero(h)) {
    auto hm = corner_e11_embed(ring, alt, h);
    CHECK(gm_degree_of(hm) == A.homogeneous_degree(h));
  }
}

TEST_CASE("permutation reindexing is a graded ring map") {
  GradedAlgebra A = m2_remark();
  FinRing ring(&A);
  GradingSpec alt = GradingSpec::periodic({Degree::z(0), Degree::z(1)});
  IndexPerm pi = IndexPerm::finite({{1, 2}, {2, 3}, {3, 1}});
  for (int t = 0; t < 40; ++t) {
    auto x = random_matrix(ring, alt, 8, 4);
    auto y = random_matrix(ring, alt, 8, 4);
    CHECK(gm_equal(permutation_iso(gm_add(x, y), pi),
                   gm_add(permutation_iso(x, pi), permutation_iso(y, pi))));
    CHECK(gm_equal(permutation_iso(gm_mul(x, y), pi),
                   gm_mul(permutation_iso(x, pi), permutation_iso(y, pi))));
    // grade preservation: phi(component(x, d)) = component(phi(x), d)
    for (const Degree& d : gm_degrees(x))
      CHECK(gm_equal(permutation_iso(gm_component(x, d), pi),
                     gm_component(permutation_iso(x, pi), d)));
  }
  // transposition moves a (x) e_{1,1} to (2,2) under the swapped spec
  auto unit = gm_embed(ring, alt, A.one(), 1, 1);
  auto moved = permutation_iso(unit, IndexPerm::finite({{1, 2}, {2, 1}}));
  CHECK(moved.ent.count({2, 2}) == 1);
  // identity fixes everything
  auto x = random_matrix(ring, alt, 6, 4);
  CHECK(gm_equal(permutation_iso(x, IndexPerm::identity()), x));
}

TEST_CASE("lazy-finite products are finite and windows respect products") {
  GradedAlgebra A = m2_remark();
  FinRing ring(&A);
  GradingSpec z0 = GradingSpec::zero(1);
  auto p = A.basis(0);
  auto lazyp = lz_indicator(ring, p, IndexSet::all());
  auto x = random_matrix(ring, z0, 6, 5);
  auto lf = mul_lazy_finite(lazyp, x);
  auto fl = mul_finite_lazy(x, lazyp);
  for (auto& [ij, v] : lf.ent) CHECK(ring.equal(v, ring.mul(p, x.at(ij.first, ij.second))));
  for (auto& [ij, v] : fl.ent) CHECK(ring.equal(v, ring.mul(x.at(ij.first, ij.second), p)));
  // window respects products when supports fit
  auto y = random_matrix(ring, z0, 6, 5);
  CHECK(gm_equal(window(gm_mul(x, y), 6), gm_mul(window(x, 6), window(y, 6))));
}

TEST_CASE("lazy support audit") {
  GradedAlgebra A = field_K();
  FinRing ring(&A);
  auto ind = lz_indicator(ring, A.one(), IndexSet::arithmetic(3, 4));
  CHECK(audit_lazy_support(ind, rng(), 200, 40));
}

TEST_CASE("double stabilization reindexing") {
  GradedAlgebra A = m2_remark();
  FinRing ring(&A);
  MatRing<FinRing> nested(ring);
  long K = 2;
  GradingSpec outer = GradingSpec::periodic({Degree::z(0), Degree::z(1)});
  auto random_nested = [&](int outer_entries) {
    GradedMatrix<MatRing<FinRing>> x(nested, outer);
    for (int t = 0; t < outer_entries; ++t) {
      long k = 1 + static_cast<long>(rng()() % K), l = 1 + static_cast<long>(rng()() % K);
      auto cell = x.at(k, l);
      cell.add_at(1 + static_cast<long>(rng()() % 4), 1 + static_cast<long>(rng()() % 4),
                  ring.random_elem(rng()));
      x.set(k, l, std::move(cell));
    }
    return x;
  };
  // (a (x) e_{1,1}) (x) e_{1,1} -> a (x) e_{pi_1(1), pi_1(1)} = (1,1)
  {
    GradedMatrix<MatRing<FinRing>> x(nested, outer);
    auto cell = nested.zero();
    cell.set(1, 1, A.one());
    x.set(1, 1, cell);
    auto out = double_stab_forward(x, K);
    CHECK(out.ent.size() == 1);
    CHECK(out.ent.count({1, 1}) == 1);
  }
  for (int t = 0; t < 30; ++t) {
    auto x = random_nested(3), y = random_nested(3);
    auto fx = double_stab_forward(x, K), fy = double_stab_forward(y, K);
    CHECK(gm_equal(double_stab_forward(gm_mul(x, y), K), gm_mul(fx, fy)));
    CHECK(gm_equal(double_stab_forward(gm_add(x, y), K), gm_add(fx, fy)));
    // round trip
    CHECK(gm_equal(double_stab_forward(double_stab_backward(fx, K), K), fx));
    // grade preservation
    for (const Degree& d : gm_degrees(x))
      CHECK(gm_equal(double_stab_forward(gm_component(x, d), K), gm_component(fx, d)));
  }
}

TEST_CASE("hg4* transport") {
  GradedAlgebra A = m2_remark();
  FinRing ring(&A);
  // identity iso with a constant-zero spec reduces to the identity
  std::function<GradedMatrix<FinRing>(const GradedMatrix<FinRing>&)> ident =
      [](const GradedMatrix<FinRing>& x) { return x; };
  GradingSpec z0 = GradingSpec::zero(1);
  for (int t = 0; t < 20; ++t) {
    auto x = random_matrix(ring, z0, 8, 4);
    CHECK(gm_equal(hg4_star_transport<FinRing, FinRing>(x, ring, ident), x));
  }
  // nontrivial inner iso (permutation reindexing), still delta = 0
  IndexPerm pi = IndexPerm::finite({{1, 2}, {2, 1}});
  std::function<GradedMatrix<FinRing>(const GradedMatrix<FinRing>&)> perm =
      [&pi](const GradedMatrix<FinRing>& x) { return permutation_iso(x, pi); };
  for (int t = 0; t < 20; ++t) {
    auto x = random_matrix(ring, z0, 6, 4);
    CHECK(gm_equal(hg4_star_transport<FinRing, FinRing>(x, ring, perm), perm(x)));
  }
  // periodic spec: identity-like map, grade-preserving
  GradingSpec alt = GradingSpec::periodic({Degree::z(0), Degree::z(1)});
  for (int t = 0; t < 20; ++t) {
    auto x = random_matrix(ring, alt, 8, 4);
    auto y = hg4_star_transport<FinRing, FinRing>(x, ring, ident);
    CHECK(gm_equal(y, x));
  }
  // a degree occurring once is rejected
  GradingSpec bad = GradingSpec::list({Degree::z(7)}, Degree::z(0));
  GradedMatrix<FinRing> xb(ring, bad);
  xb.set(1, 1, A.one());
  CHECK_THROWS_AS((hg4_star_transport<FinRing, FinRing>(xb, ring, ident)), MatrixError);
}

TEST_CASE("matrix JSON round trip") {
  GradedAlgebra A = m2_remark();
  FinRing ring(&A);
  GradingSpec alt = GradingSpec::periodic({Degree::z(0), Degree::z(1)});
  auto x = random_matrix(ring, alt, 6, 4);
  auto y = gm_from_json(ring, gm_to_json(x));
  CHECK(gm_equal(x, y));
  CHECK(y.spec == x.spec);
}
