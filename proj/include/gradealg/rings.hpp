#ifndef GRADEALG_RINGS_HPP
#define GRADEALG_RINGS_HPP

#include <random>
#include <string>
#include <vector>

#include "gradealg/fin_algebra.hpp"
#include "gradealg/lpa.hpp"

namespace gradealg {

// Ring adapters give matrix and stabilization code a uniform element API.
// A conforming ring R provides: Elem, zero/add/sub/neg/mul, is_zero/equal,
// component(Elem, Degree), elem_degrees, deg_dim, to_text; unital rings add
// one(). Adapters are cheap handles; the referenced algebra must outlive
// them.

class FinRing {
 public:
  using Elem = AlgElem;
  explicit FinRing(const GradedAlgebra* a) : a_(a) {}
  const GradedAlgebra& algebra() const { return *a_; }

  Elem zero() const { return {}; }
  Elem one() const { return a_->one(); }
  Elem add(const Elem& x, const Elem& y) const { return a_->add(x, y); }
  Elem sub(const Elem& x, const Elem& y) const { return a_->sub(x, y); }
  Elem neg(const Elem& x) const { return a_->neg(x); }
  Elem mul(const Elem& x, const Elem& y) const { return a_->mul(x, y); }
  Elem scalar_mul(const Scalar& c, const Elem& x) const { return a_->scalar_mul(c, x); }
  bool is_zero(const Elem& x) const { return x.is_zero(); }
  bool equal(const Elem& x, const Elem& y) const { return x == y; }
  int deg_dim() const { return a_->deg_dim(); }
  Elem component(const Elem& x, const Degree& d) const { return a_->component(x, d); }
  std::vector<Degree> elem_degrees(const Elem& x) const { return a_->elem_degrees(x); }
  std::string to_text(const Elem& x) const { return a_->elem_str(x); }
  Elem parse_text(const std::string& s) const { return a_->parse_elem(s); }

  Elem random_elem(std::mt19937_64& rng) const {
    Elem x;
    for (int i = 0; i < a_->dim(); ++i)
      if (rng() % 3 == 0) {
        long c = static_cast<long>(rng() % 5) - 2;
        if (c) x.c.emplace(i, Scalar(c));
      }
    return x;
  }
  Elem random_homogeneous(std::mt19937_64& rng) const {
    auto degs = a_->occupied_degrees();
    if (degs.empty()) return {};
    const Degree& d = degs[rng() % degs.size()];
    Elem x;
    for (int i : a_->degree_block(d))
      if (rng() % 2 == 0) {
        long c = static_cast<long>(rng() % 5) - 2;
        if (c) x.c.emplace(i, Scalar(c));
      }
    return x;
  }

 private:
  const GradedAlgebra* a_;
};

class LpaRing {
 public:
  using Elem = LpaElem;
  explicit LpaRing(const LpaAlgebra* l) : l_(l) {}
  const LpaAlgebra& algebra() const { return *l_; }

  Elem zero() const { return {}; }
  Elem one() const { return l_->one(); }
  Elem add(const Elem& x, const Elem& y) const { return l_->add(x, y); }
  Elem sub(const Elem& x, const Elem& y) const { return l_->sub(x, y); }
  Elem neg(const Elem& x) const { return l_->neg(x); }
  Elem mul(const Elem& x, const Elem& y) const { return l_->mul(x, y); }
  Elem scalar_mul(const Scalar& c, const Elem& x) const { return l_->scalar_mul(c, x); }
  bool is_zero(const Elem& x) const { return x.is_zero(); }
  bool equal(const Elem& x, const Elem& y) const { return x == y; }
  int deg_dim() const { return 1; }
  Elem component(const Elem& x, const Degree& d) const {
    if (d.dim() != 1) throw LpaError("LPA elements are Z-graded");
    return l_->component(x, d[0]);
  }
  std::vector<Degree> elem_degrees(const Elem& x) const {
    std::vector<Degree> out;
    for (long n : l_->elem_degrees(x)) out.push_back(Degree::z(n));
    return out;
  }
  std::string to_text(const Elem& x) const { return l_->str(x); }
  Elem parse_text(const std::string& s) const { return l_->parse(s); }

  Elem random_elem(std::mt19937_64& rng) const {
    Elem x;
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
      long c = static_cast<long>(rng() % 5) - 2;
      x = l_->add(x, l_->scalar_mul(Scalar(c), random_word_(rng)));
    }
    return x;
  }
  Elem random_homogeneous(std::mt19937_64& rng) const {
    Elem x = random_elem(rng);
    auto degs = l_->elem_degrees(x);
    if (degs.empty()) return x;
    return l_->component(x, degs[rng() % degs.size()]);
  }

 private:
  const LpaAlgebra* l_;
  Elem random_word_(std::mt19937_64& rng) const {
    const Graph& g = l_->graph();
    Elem acc = l_->one();
    int len = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < len; ++i) {
      switch (rng() % 3) {
        case 0:
          acc = l_->mul(acc, l_->vertex(static_cast<int>(rng() % g.num_vertices())));
          break;
        case 1:
          if (g.num_edges())
            acc = l_->mul(acc, l_->edge(static_cast<int>(rng() % g.num_edges())));
          break;
        default:
          if (g.num_edges())
            acc = l_->mul(acc, l_->ghost(static_cast<int>(rng() % g.num_edges())));
          break;
      }
    }
    return acc;
  }
};

}  // namespace gradealg

#endif
