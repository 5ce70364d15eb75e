// Test-only oracles, independent of the library's rewriting implementation.
#ifndef GRADEALG_TESTS_ORACLES_HPP
#define GRADEALG_TESTS_ORACLES_HPP

#include <map>
#include <vector>

#include "gradealg/graph.hpp"
#include "gradealg/linalg.hpp"

namespace gradealg::oracles {

// Dimension of L_K(E) for an acyclic graph by brute force: span of all
// path pairs with common range, modulo the linear span of the CK2
// relators lam (v - sum_{s(e)=v} e e*) mu*.
inline long lpa_dim_by_quotient(const Graph& g) {
  int longest = 0;
  for (int v = 0; v < g.num_vertices(); ++v)
    longest = std::max(longest, max_path_length_to(g, v));
  // all paths, grouped by range
  std::vector<GPath> paths;
  for (int len = 0; len <= longest; ++len)
    for (const GPath& p : paths_of_length(g, len)) paths.push_back(p);
  std::map<std::pair<GPath, GPath>, int> index;
  std::vector<std::pair<GPath, GPath>> monos;
  for (const GPath& lam : paths)
    for (const GPath& mu : paths)
      if (lam.range(g) == mu.range(g)) {
        index.emplace(std::make_pair(lam, mu), static_cast<int>(monos.size()));
        monos.emplace_back(lam, mu);
      }
  RowSpace rel(static_cast<int>(monos.size()));
  for (const auto& [lam, mu] : monos) {
    int v = lam.range(g);
    if (g.out_edges(v).empty()) continue;  // sink: no CK2 relation
    Vec r(monos.size());
    r[index.at({lam, mu})] = Scalar(1);
    for (int e : g.out_edges(v)) {
      GPath le = lam, me = mu;
      le.edges.push_back(e);
      me.edges.push_back(e);
      r[index.at({le, me})] -= Scalar(1);
    }
    rel.insert(std::move(r));
  }
  return static_cast<long>(monos.size()) - rel.rank();
}

// All acyclic multigraphs on <= max_v labeled vertices with edge
// multiplicity <= 2 between each ordered pair (no loops: loops are cycles).
inline std::vector<Graph> small_acyclic_graphs(int max_v) {
  std::vector<Graph> out;
  for (int nv = 1; nv <= max_v; ++nv) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < nv; ++i)
      for (int j = 0; j < nv; ++j)
        if (i != j) arcs.emplace_back(i, j);
    std::vector<int> mult(arcs.size(), 0);
    // odometer over multiplicities 0..2
    while (true) {
      std::vector<std::string> verts;
      for (int i = 0; i < nv; ++i) verts.push_back("v" + std::to_string(i));
      std::vector<std::tuple<std::string, std::string, std::string>> edges;
      int en = 0;
      for (size_t a = 0; a < arcs.size(); ++a)
        for (int m = 0; m < mult[a]; ++m)
          edges.emplace_back("e" + std::to_string(en++), verts[arcs[a].first],
                             verts[arcs[a].second]);
      Graph g(verts, edges);
      if (is_acyclic(g)) out.push_back(std::move(g));
      size_t pos = 0;
      while (pos < mult.size() && mult[pos] == 2) mult[pos++] = 0;
      if (pos == mult.size()) break;
      ++mult[pos];
    }
  }
  return out;
}

}  // namespace gradealg::oracles

#endif
