#include "gradealg/fin_algebra.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gradealg {

bool AlgElem::operator==(const AlgElem& o) const { return c == o.c; }

GradedAlgebra::GradedAlgebra(std::vector<std::string> names, std::vector<Degree> degrees,
                             std::vector<std::tuple<int, int, int, Scalar>> structure,
                             std::optional<AlgElem> unit, bool validate)
    : names_(std::move(names)), degrees_(std::move(degrees)), unit_(std::move(unit)) {
  int n = dim();
  if (static_cast<int>(degrees_.size()) != n)
    throw AlgebraError("basis/degree count mismatch");
  if (n > 0) deg_dim_ = degrees_[0].dim();
  for (const auto& d : degrees_)
    if (d.dim() != deg_dim_) throw AlgebraError("inconsistent degree dimensions");
  for (int i = 0; i < n; ++i)
    if (!index_.emplace(names_[i], i).second)
      throw AlgebraError("duplicate basis name: " + names_[i]);
  table_.assign(static_cast<size_t>(n) * n, {});
  for (auto& [i, j, k, c] : structure) {
    if (i < 0 || i >= n || j < 0 || j >= n || k < 0 || k >= n)
      throw AlgebraError("structure constant index out of range");
    if (c.is_zero()) continue;
    auto& cell = table_[static_cast<size_t>(i) * n + j];
    bool merged = false;
    for (auto& [kk, cc] : cell)
      if (kk == k) {
        cc += c;
        merged = true;
        break;
      }
    if (!merged) cell.emplace_back(k, c);
  }
  for (auto& cell : table_) {
    std::sort(cell.begin(), cell.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    cell.erase(std::remove_if(cell.begin(), cell.end(),
                              [](const auto& p) { return p.second.is_zero(); }),
               cell.end());
  }
  if (validate) validate_();
}

void GradedAlgebra::validate_() const {
  int n = dim();
  // graded multiplicativity on the table
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Degree d = degrees_[i] + degrees_[j];
      for (auto& [k, c] : table_[static_cast<size_t>(i) * n + j])
        if (degrees_[k] != d)
          throw AlgebraError("structure constants are not graded: " + names_[i] + "*" +
                             names_[j] + " hits degree " + degrees_[k].str());
    }
  // associativity on all basis triples
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      AlgElem ij = mul(basis(i), basis(j));
      for (int k = 0; k < n; ++k) {
        AlgElem l = mul(ij, basis(k));
        AlgElem r = mul(basis(i), mul(basis(j), basis(k)));
        if (!(l == r))
          throw AlgebraError("associativity fails at (" + names_[i] + "," + names_[j] + "," +
                             names_[k] + ")");
      }
    }
  if (unit_) {
    if (auto d = homogeneous_degree(*unit_); !d || !d->is_zero())
      throw AlgebraError("unit must be homogeneous of degree 0");
    for (int i = 0; i < n; ++i) {
      if (!(mul(*unit_, basis(i)) == basis(i)) || !(mul(basis(i), *unit_) == basis(i)))
        throw AlgebraError("declared unit is not a two-sided identity");
    }
  }
}

AlgElem GradedAlgebra::one() const {
  if (!unit_) throw AlgebraError("algebra has no unit");
  return *unit_;
}

AlgElem GradedAlgebra::add(const AlgElem& x, const AlgElem& y) const {
  AlgElem r = x;
  for (auto& [i, c] : y.c) {
    auto it = r.c.find(i);
    if (it == r.c.end()) {
      r.c.emplace(i, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) r.c.erase(it);
    }
  }
  return r;
}

AlgElem GradedAlgebra::sub(const AlgElem& x, const AlgElem& y) const {
  return add(x, neg(y));
}

AlgElem GradedAlgebra::neg(const AlgElem& x) const {
  AlgElem r = x;
  for (auto& [i, c] : r.c) c = -c;
  return r;
}

AlgElem GradedAlgebra::scalar_mul(const Scalar& c, const AlgElem& x) const {
  if (c.is_zero()) return {};
  AlgElem r = x;
  for (auto& [i, cc] : r.c) cc *= c;
  return r;
}

AlgElem GradedAlgebra::mul(const AlgElem& x, const AlgElem& y) const {
  AlgElem r;
  int n = dim();
  for (auto& [i, ci] : x.c)
    for (auto& [j, cj] : y.c) {
      Scalar c = ci * cj;
      for (auto& [k, ck] : table_[static_cast<size_t>(i) * n + j]) {
        auto it = r.c.find(k);
        if (it == r.c.end()) {
          Scalar v = c * ck;
          if (!v.is_zero()) r.c.emplace(k, v);
        } else {
          it->second += c * ck;
          if (it->second.is_zero()) r.c.erase(it);
        }
      }
    }
  return r;
}

AlgElem GradedAlgebra::component(const AlgElem& x, const Degree& g) const {
  AlgElem r;
  for (auto& [i, c] : x.c)
    if (degrees_[i] == g) r.c.emplace(i, c);
  return r;
}

std::optional<Degree> GradedAlgebra::homogeneous_degree(const AlgElem& x) const {
  std::optional<Degree> d;
  for (auto& [i, c] : x.c) {
    if (!d) {
      d = degrees_[i];
    } else if (*d != degrees_[i]) {
      return std::nullopt;
    }
  }
  return x.is_zero() ? std::nullopt : d;
}

std::vector<Degree> GradedAlgebra::elem_degrees(const AlgElem& x) const {
  std::set<Degree> s;
  for (auto& [i, c] : x.c) s.insert(degrees_[i]);
  return {s.begin(), s.end()};
}

std::vector<Degree> GradedAlgebra::occupied_degrees() const {
  std::set<Degree> s(degrees_.begin(), degrees_.end());
  return {s.begin(), s.end()};
}

std::vector<int> GradedAlgebra::degree_block(const Degree& g) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (degrees_[i] == g) out.push_back(i);
  return out;
}

bool GradedAlgebra::is_idempotent(const AlgElem& e) const { return mul(e, e) == e; }

Vec GradedAlgebra::to_vec(const AlgElem& x) const {
  Vec v(dim());
  for (auto& [i, c] : x.c) v[i] = c;
  return v;
}

AlgElem GradedAlgebra::from_vec(const Vec& v) const {
  AlgElem r;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) r.c.emplace(i, v[i]);
  return r;
}

std::string GradedAlgebra::elem_str(const AlgElem& x) const {
  if (x.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& [i, c] : x.c) {
    std::string cs = c.str();
    bool negated = !cs.empty() && cs[0] == '-';
    if (first) {
      if (negated) s += "-";
    } else {
      s += negated ? " - " : " + ";
    }
    if (negated) cs = cs.substr(1);
    if (cs != "1") s += cs + "*";
    s += names_[i];
    first = false;
  }
  return s;
}

AlgElem GradedAlgebra::parse_elem(const std::string& s) const {
  AlgElem r;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip_ws();
  if (pos == s.size()) return r;
  if (s.substr(pos) == "0" && !index_.count("0")) return r;
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
      throw AlgebraError("expected +/- in element text near: " + s.substr(pos));
    }
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && !isspace(static_cast<unsigned char>(s[pos])) && s[pos] != '+' &&
           (s[pos] != '-' || pos == start))
      ++pos;
    std::string term = s.substr(start, pos - start);
    if (term.empty()) throw AlgebraError("empty term in element text");
    // term := [rational *] basis-name; '*' splits at the first occurrence
    // unless the whole term is a basis name.
    Scalar coeff(1);
    std::string name = term;
    if (!index_.count(term)) {
      size_t star = term.find('*');
      if (star == std::string::npos) {
        auto c = Scalar::parse(term);
        if (!c) throw AlgebraError("unknown basis name: " + term);
        // pure scalar term only valid as coefficient of nothing -> reject
        throw AlgebraError("scalar term without basis name: " + term);
      }
      auto c = Scalar::parse(term.substr(0, star));
      if (!c) throw AlgebraError("bad coefficient: " + term.substr(0, star));
      coeff = *c;
      name = term.substr(star + 1);
      if (!index_.count(name)) throw AlgebraError("unknown basis name: " + name);
    }
    int idx = index_.at(name);
    auto it = r.c.find(idx);
    Scalar v = sign * coeff;
    if (it == r.c.end()) {
      if (!v.is_zero()) r.c.emplace(idx, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) r.c.erase(it);
    }
    first = false;
  }
  return r;
}

std::string GradedAlgebra::to_json() const {
  nlohmann::json j;
  j["basis"] = nlohmann::json::array();
  for (int i = 0; i < dim(); ++i)
    j["basis"].push_back({{"name", names_[i]}, {"degree", degrees_[i].coords()}});
  j["structure"] = nlohmann::json::array();
  int n = dim();
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj)
      for (auto& [k, c] : table_[static_cast<size_t>(i) * n + jj])
        j["structure"].push_back({i, jj, k, c.numerator().str(), c.denominator().str()});
  if (unit_) {
    nlohmann::json u = nlohmann::json::array();
    for (auto& [i, c] : unit_->c)
      u.push_back({i, c.numerator().str(), c.denominator().str()});
    j["unit"] = u;
  }
  return j.dump();
}

GradedAlgebra GradedAlgebra::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  std::vector<std::string> names;
  std::vector<Degree> degs;
  for (auto& b : j.at("basis")) {
    names.push_back(b.at("name").get<std::string>());
    degs.push_back(Degree(b.at("degree").get<std::vector<long>>()));
  }
  std::vector<std::tuple<int, int, int, Scalar>> structure;
  for (auto& t : j.at("structure")) {
    Scalar num = *Scalar::parse(t.at(3).get<std::string>());
    Scalar den = *Scalar::parse(t.at(4).get<std::string>());
    structure.emplace_back(t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>(),
                           num / den);
  }
  std::optional<AlgElem> unit;
  if (j.contains("unit")) {
    AlgElem u;
    for (auto& t : j["unit"]) {
      Scalar num = *Scalar::parse(t.at(1).get<std::string>());
      Scalar den = *Scalar::parse(t.at(2).get<std::string>());
      u.c.emplace(t.at(0).get<int>(), num / den);
    }
    unit = u;
  }
  return GradedAlgebra(std::move(names), std::move(degs), std::move(structure), std::move(unit));
}

// ---- corners ----

AlgElem CornerAlgebra::to_corner(const GradedAlgebra& A, const AlgElem& ambient) const {
  RowSpaceCombos combos(A.dim());
  for (const auto& b : basis_ambient) combos.insert(A.to_vec(b));
  auto coords = combos.express(A.to_vec(ambient));
  if (!coords) throw AlgebraError("element is not in the corner");
  AlgElem r;
  for (int i = 0; i < static_cast<int>(coords->size()); ++i)
    if (!(*coords)[i].is_zero()) r.c.emplace(i, (*coords)[i]);
  return r;
}

AlgElem CornerAlgebra::to_ambient(const AlgElem& corner_elem) const {
  AlgElem r;
  if (basis_ambient.empty()) return r;
  // accumulate in ambient coordinates
  for (auto& [i, c] : corner_elem.c) {
    for (auto& [k, ck] : basis_ambient[i].c) {
      // manual add to avoid needing the algebra handle
      auto it = r.c.find(k);
      Scalar v = c * ck;
      if (it == r.c.end()) {
        if (!v.is_zero()) r.c.emplace(k, v);
      } else {
        it->second += v;
        if (it->second.is_zero()) r.c.erase(it);
      }
    }
  }
  return r;
}

CornerAlgebra corner(const GradedAlgebra& A, const AlgElem& e) {
  if (!A.is_idempotent(e)) throw AlgebraError("corner: e is not idempotent");
  if (!e.is_zero()) {
    auto d = A.homogeneous_degree(e);
    if (!d || !d->is_zero())
      throw AlgebraError("corner: e must be homogeneous of degree 0");
  }
  // Reduce {e b_i e} degree by degree so the corner basis stays homogeneous.
  std::vector<AlgElem> basis_amb;
  std::vector<Degree> degs;
  for (const Degree& g : A.occupied_degrees()) {
    RowSpace span(A.dim());
    for (int i : A.degree_block(g))
      span.insert(A.to_vec(A.mul(e, A.mul(A.basis(i), e))));
    for (const Vec& row : span.basis()) {
      basis_amb.push_back(A.from_vec(row));
      degs.push_back(g);
    }
  }
  int n = static_cast<int>(basis_amb.size());
  // coordinates in the corner basis via one combo space over all degrees
  RowSpaceCombos combos(A.dim());
  for (const auto& b : basis_amb) combos.insert(A.to_vec(b));
  auto coords_of = [&](const AlgElem& x) {
    auto c = combos.express(A.to_vec(x));
    if (!c) throw AlgebraError("corner product left the corner (internal)");
    return *c;
  };
  std::vector<std::tuple<int, int, int, Scalar>> structure;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto prod = coords_of(A.mul(basis_amb[i], basis_amb[j]));
      for (int k = 0; k < n; ++k)
        if (!prod[k].is_zero()) structure.emplace_back(i, j, k, prod[k]);
    }
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  std::optional<AlgElem> unit;
  if (!e.is_zero()) {
    auto ec = combos.express(A.to_vec(e));
    if (!ec) throw AlgebraError("corner: e not in its own corner (internal)");
    AlgElem u;
    for (int i = 0; i < n; ++i)
      if (!(*ec)[i].is_zero()) u.c.emplace(i, (*ec)[i]);
    unit = u;
  }
  CornerAlgebra out{
      GradedAlgebra(std::move(names), std::move(degs), std::move(structure), std::move(unit)),
      std::move(basis_amb)};
  return out;
}

// ---- ideals and fullness ----

std::vector<AlgElem> two_sided_ideal(const GradedAlgebra& A, const AlgElem& e) {
  RowSpace span(A.dim());
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < A.dim(); ++j)
      span.insert(A.to_vec(A.mul(A.basis(i), A.mul(e, A.basis(j)))));
  std::vector<AlgElem> out;
  for (const Vec& row : span.basis()) out.push_back(A.from_vec(row));
  return out;
}

bool is_full(const GradedAlgebra& A, const AlgElem& e) {
  return static_cast<int>(two_sided_ideal(A, e).size()) == A.dim();
}

FullnessWitness fullness_witness(const GradedAlgebra& A, const AlgElem& e) {
  AlgElem one = A.one();
  if (e == one) return FullnessWitness{{{one, one}}};
  int n = A.dim();
  RowSpaceCombos combos(n);
  std::vector<std::pair<int, int>> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      combos.insert(A.to_vec(A.mul(A.basis(i), A.mul(e, A.basis(j)))));
      gens.emplace_back(i, j);
    }
  auto coeffs = combos.express(A.to_vec(one));
  if (!coeffs) throw AlgebraError("fullness_witness: idempotent is not full");
  FullnessWitness w;
  for (size_t g = 0; g < coeffs->size(); ++g) {
    if ((*coeffs)[g].is_zero()) continue;
    auto [i, j] = gens[g];
    w.pairs.emplace_back(A.scalar_mul((*coeffs)[g], A.basis(i)), A.basis(j));
  }
  if (!verify_witness(A, e, w)) throw AlgebraError("fullness_witness verification failed");
  return w;
}

bool verify_witness(const GradedAlgebra& A, const AlgElem& e, const FullnessWitness& w) {
  AlgElem sum;
  for (auto& [x, y] : w.pairs) sum = A.add(sum, A.mul(x, A.mul(e, y)));
  return sum == A.one();
}

// ---- matrix algebras ----

int matrix_unit_index(const GradedAlgebra& A, int n, int b, int i, int j) {
  return ((i - 1) * n + (j - 1)) * A.dim() + b;
}

GradedAlgebra matrix_algebra(const GradedAlgebra& A, int n, const std::vector<Degree>& delta) {
  if (static_cast<int>(delta.size()) != n)
    throw AlgebraError("matrix_algebra: |delta| != n");
  for (auto& d : delta)
    if (d.dim() != A.deg_dim()) throw AlgebraError("matrix_algebra: delta degree dimension");
  std::vector<std::string> names;
  std::vector<Degree> degs;
  int ad = A.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int b = 0; b < ad; ++b) {
        std::string nm = "e[" + std::to_string(i) + "," + std::to_string(j) + "]";
        if (!(ad == 1 && A.name(0) == "1")) nm = A.name(b) + "*" + nm;
        names.push_back(nm);
        degs.push_back(A.degree(b) + delta[i - 1] - delta[j - 1]);
      }
  std::vector<std::tuple<int, int, int, Scalar>> structure;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int b = 0; b < ad; ++b)
          for (int c = 0; c < ad; ++c) {
            AlgElem prod = A.mul(A.basis(b), A.basis(c));
            for (auto& [t, coeff] : prod.c)
              structure.emplace_back(matrix_unit_index(A, n, b, i, j),
                                     matrix_unit_index(A, n, c, j, k),
                                     matrix_unit_index(A, n, t, i, k), coeff);
          }
  std::optional<AlgElem> unit;
  if (A.unit()) {
    AlgElem u;
    for (int i = 1; i <= n; ++i)
      for (auto& [b, c] : A.unit()->c) u.c.emplace(matrix_unit_index(A, n, b, i, i), c);
    unit = u;
  }
  return GradedAlgebra(std::move(names), std::move(degs), std::move(structure), std::move(unit));
}

// ---- zero component ----

AlgElem SubAlgebra::restrict(const AlgElem& ambient) const {
  AlgElem r;
  std::map<int, int> rev;
  for (int i = 0; i < static_cast<int>(ambient_index.size()); ++i) rev[ambient_index[i]] = i;
  for (auto& [k, c] : ambient.c) {
    auto it = rev.find(k);
    if (it == rev.end()) throw AlgebraError("element is not in the subalgebra");
    r.c.emplace(it->second, c);
  }
  return r;
}

AlgElem SubAlgebra::embed(const AlgElem& sub) const {
  AlgElem r;
  for (auto& [i, c] : sub.c) r.c.emplace(ambient_index[i], c);
  return r;
}

SubAlgebra zero_component(const GradedAlgebra& A) {
  Degree z = Degree::zero(A.deg_dim());
  std::vector<int> idx = A.degree_block(z);
  std::map<int, int> rev;
  for (int i = 0; i < static_cast<int>(idx.size()); ++i) rev[idx[i]] = i;
  std::vector<std::string> names;
  std::vector<Degree> degs;
  for (int k : idx) {
    names.push_back(A.name(k));
    degs.push_back(z);
  }
  std::vector<std::tuple<int, int, int, Scalar>> structure;
  for (int i = 0; i < static_cast<int>(idx.size()); ++i)
    for (int j = 0; j < static_cast<int>(idx.size()); ++j) {
      AlgElem p = A.mul(A.basis(idx[i]), A.basis(idx[j]));
      for (auto& [k, c] : p.c) structure.emplace_back(i, j, rev.at(k), c);
    }
  std::optional<AlgElem> unit;
  if (A.unit()) {
    AlgElem u;
    for (auto& [k, c] : A.unit()->c) {
      auto it = rev.find(k);
      if (it == rev.end()) throw AlgebraError("unit is not in the zero component");
      u.c.emplace(it->second, c);
    }
    unit = u;
  }
  return SubAlgebra{
      GradedAlgebra(std::move(names), std::move(degs), std::move(structure), std::move(unit)),
      std::move(idx)};
}

int block_count(const GradedAlgebra& A0) {
  int n = A0.dim();
  if (n == 0) throw AlgebraError("block_count of the zero algebra");
  auto trace_LL = [&](int i, int j) {
    // tr(L_i L_j) = sum_k coefficient of b_k in b_i (b_j b_k)
    Scalar t;
    for (int k = 0; k < n; ++k) {
      AlgElem jk = A0.mul(A0.basis(j), A0.basis(k));
      AlgElem ijk = A0.mul(A0.basis(i), jk);
      auto it = ijk.c.find(k);
      if (it != ijk.c.end()) t += it->second;
    }
    return t;
  };
  // Radical of the trace form; nonzero kernel means a nonzero Jacobson
  // radical (char 0), i.e. the input is not semisimple.
  std::vector<Vec> gram(n, Vec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram[i][j] = trace_LL(i, j);
  RowSpace gspan(n);
  for (int i = 0; i < n; ++i) gspan.insert(gram[i]);
  if (gspan.rank() < n)
    throw AlgebraError("block_count: trace form degenerate (algebra not semisimple)");
  // Center: x with b_i x = x b_i for all i. Solve the homogeneous system.
  // unknowns: coordinates of x; equations per (i, coordinate).
  std::vector<Vec> eqs;
  for (int i = 0; i < n; ++i) {
    // row r of constraint block: sum_j x_j * (L_i[j] - R_i[j]) = 0
    for (int coord = 0; coord < n; ++coord) {
      Vec eq(n);
      for (int j = 0; j < n; ++j) {
        AlgElem lj = A0.mul(A0.basis(i), A0.basis(j));
        AlgElem rj = A0.mul(A0.basis(j), A0.basis(i));
        Scalar v;
        auto it = lj.c.find(coord);
        if (it != lj.c.end()) v += it->second;
        it = rj.c.find(coord);
        if (it != rj.c.end()) v -= it->second;
        eq[j] = v;
      }
      eqs.push_back(std::move(eq));
    }
  }
  RowSpace espan(n);
  for (auto& e : eqs) espan.insert(std::move(e));
  int center_dim = n - espan.rank();
  return center_dim;
}

// ---- strongly graded ----

StronglyGradedReport is_strongly_graded(const GradedAlgebra& A) {
  if (A.dim() == 0) return {true, "zero algebra"};
  auto occ = A.occupied_degrees();
  // deficient occupied pair first (informative witness)
  for (const Degree& g : occ)
    for (const Degree& d : occ) {
      Degree s = g + d;
      auto block = A.degree_block(s);
      if (block.empty()) continue;
      RowSpace span(A.dim());
      for (int i : A.degree_block(g))
        for (int j : A.degree_block(d))
          span.insert(A.to_vec(A.mul(A.basis(i), A.basis(j))));
      if (span.rank() < static_cast<int>(block.size()))
        return {false, "A_" + g.str() + " * A_" + d.str() + " spans only " +
                           std::to_string(span.rank()) + " of dim " +
                           std::to_string(block.size()) + " in A_" + s.str()};
    }
  if (A.deg_dim() == 0) return {true, "trivial grading group, products span A_0"};
  // Z^d is infinite: a finite-dimensional nonzero algebra has some A_g = 0,
  // and then A_g A_{-g} = 0 != A_0.
  long m = 0;
  for (const Degree& g : occ)
    for (long c : g.coords()) m = std::max(m, std::abs(c));
  std::vector<long> witness(A.deg_dim(), 0);
  witness[0] = 2 * m + 1;
  return {false, "support is finite: A_" + Degree(witness).str() +
                     " = 0 while the grading group is infinite"};
}

// ---- graded iso search ----

IsoSearchResult graded_iso_search(const GradedAlgebra& A, const GradedAlgebra& B,
                                  int dim_budget) {
  IsoSearchResult res;
  if (A.dim() != B.dim()) {
    res.status = IsoSearchResult::Status::certified_negative;
    res.note = "dimension mismatch";
    return res;
  }
  for (const Degree& g : A.occupied_degrees()) {
    if (A.degree_block(g).size() != B.degree_block(g).size()) {
      res.status = IsoSearchResult::Status::certified_negative;
      res.note = "per-degree dimension mismatch at " + g.str();
      return res;
    }
  }
  for (const Degree& g : B.occupied_degrees()) {
    if (A.degree_block(g).size() != B.degree_block(g).size()) {
      res.status = IsoSearchResult::Status::certified_negative;
      res.note = "per-degree dimension mismatch at " + g.str();
      return res;
    }
  }
  if (A.dim() > dim_budget) throw AlgebraError("graded_iso_search: dimension over search budget");

  int n = A.dim();
  // Bounded search over degree-preserving basis bijections that match the
  // structure constants exactly (monomial isomorphisms). Found maps are
  // verified below; exhausting the search is reported as not_found.
  std::vector<int> map(n, -1), used(n, 0);
  auto push = [&](const AlgElem& x) -> std::optional<AlgElem> {
    AlgElem r;
    for (auto& [i, c] : x.c) {
      if (map[i] < 0) return std::nullopt;
      r.c.emplace(map[i], c);
    }
    return r;
  };
  std::function<bool(int)> assign = [&](int i) -> bool {
    if (i == n) {
      if (A.unit() && B.unit()) {
        auto u = push(*A.unit());
        if (!u || !(*u == *B.unit())) return false;
      }
      return true;
    }
    for (int j : B.degree_block(A.degree(i))) {
      if (used[j]) continue;
      map[i] = j;
      used[j] = 1;
      bool ok = true;
      for (int k = 0; k <= i && ok; ++k) {
        for (auto [a, b] : {std::pair{i, k}, std::pair{k, i}}) {
          AlgElem prod = A.mul(A.basis(a), A.basis(b));
          auto img = push(prod);
          if (!img) continue;  // product mentions unassigned indices; recheck later
          if (!(B.mul(B.basis(map[a]), B.basis(map[b])) == *img)) {
            ok = false;
            break;
          }
        }
      }
      if (ok && assign(i + 1)) return true;
      used[j] = 0;
      map[i] = -1;
    }
    return false;
  };
  if (assign(0)) {
    // full verification of the candidate
    bool good = true;
    for (int i = 0; i < n && good; ++i)
      for (int j = 0; j < n && good; ++j) {
        auto img = push(A.mul(A.basis(i), A.basis(j)));
        if (!img || !(B.mul(B.basis(map[i]), B.basis(map[j])) == *img)) good = false;
      }
    if (good) {
      res.status = IsoSearchResult::Status::found;
      res.basis_map = map;
      res.note = "monomial isomorphism";
      return res;
    }
  }
  res.status = IsoSearchResult::Status::not_found;
  res.note = "bounded search exhausted (not a disproof)";
  return res;
}

}  // namespace gradealg
