#include "gradealg/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace gradealg {

Graph::Graph(std::vector<std::string> vertices,
             std::vector<std::tuple<std::string, std::string, std::string>> edges) {
  if (vertices.empty()) throw GraphError("empty vertex set");
  vnames_ = std::move(vertices);
  for (int i = 0; i < static_cast<int>(vnames_.size()); ++i) {
    if (!vindex_.emplace(vnames_[i], i).second)
      throw GraphError("duplicate vertex id: " + vnames_[i]);
  }
  out_.resize(vnames_.size());
  in_.resize(vnames_.size());
  for (auto& [name, src, tgt] : edges) {
    auto si = vindex_.find(src);
    if (si == vindex_.end()) throw GraphError("edge " + name + ": unknown src " + src);
    auto ti = vindex_.find(tgt);
    if (ti == vindex_.end()) throw GraphError("edge " + name + ": unknown tgt " + tgt);
    int e = static_cast<int>(edges_.size());
    if (!eindex_.emplace(name, e).second) throw GraphError("duplicate edge id: " + name);
    edges_.push_back(Edge{name, si->second, ti->second});
    out_[si->second].push_back(e);
    in_[ti->second].push_back(e);
  }
}

std::optional<int> Graph::vertex_index(const std::string& name) const {
  auto it = vindex_.find(name);
  if (it == vindex_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Graph::edge_index(const std::string& name) const {
  auto it = eindex_.find(name);
  if (it == eindex_.end()) return std::nullopt;
  return it->second;
}

std::string GPath::str(const Graph& g) const {
  if (edges.empty()) return g.vertex_name(src);
  std::string s;
  for (size_t i = 0; i < edges.size(); ++i) {
    if (i) s += ".";
    s += g.edge(edges[i]).name;
  }
  return s;
}

Graph load_graph(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    throw GraphError(std::string("graph JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw GraphError("graph JSON: missing \"vertices\" array");
  std::vector<std::string> verts;
  for (auto& v : j["vertices"]) {
    if (!v.is_string()) throw GraphError("graph JSON: vertex ids must be strings");
    verts.push_back(v.get<std::string>());
  }
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw GraphError("graph JSON: \"edges\" must be an array");
    for (auto& e : j["edges"]) {
      if (!e.is_object() || !e.contains("name") || !e.contains("src") || !e.contains("tgt") ||
          !e["name"].is_string() || !e["src"].is_string() || !e["tgt"].is_string())
        throw GraphError("graph JSON: each edge needs string name/src/tgt");
      edges.emplace_back(e["name"].get<std::string>(), e["src"].get<std::string>(),
                         e["tgt"].get<std::string>());
    }
  }
  return Graph(std::move(verts), std::move(edges));
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open graph file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_graph(ss.str());
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (int v = 0; v < g.num_vertices(); ++v) j["vertices"].push_back(g.vertex_name(v));
  j["edges"] = nlohmann::json::array();
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto& ed = g.edge(e);
    j["edges"].push_back({{"name", ed.name},
                          {"src", g.vertex_name(ed.src)},
                          {"tgt", g.vertex_name(ed.tgt)}});
  }
  return j.dump();
}

std::vector<GPath> paths_of_length(const Graph& g, int n, std::optional<int> source,
                                   std::optional<int> range) {
  if (n < 0) throw GraphError("negative path length");
  if (source && (*source < 0 || *source >= g.num_vertices()))
    throw GraphError("unknown source vertex index");
  if (range && (*range < 0 || *range >= g.num_vertices()))
    throw GraphError("unknown range vertex index");
  std::vector<GPath> out;
  std::function<void(GPath&, int)> extend = [&](GPath& p, int remaining) {
    if (remaining == 0) {
      if (!range || p.range(g) == *range) out.push_back(p);
      return;
    }
    for (int e : g.out_edges(p.range(g))) {
      p.edges.push_back(e);
      extend(p, remaining - 1);
      p.edges.pop_back();
    }
  };
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (source && v != *source) continue;
    GPath p{v, {}};
    extend(p, n);
  }
  return out;
}

std::optional<int> primitivity_length(const Graph& g) {
  int nv = g.num_vertices();
  // Boolean adjacency powers up to the Wielandt bound (|V|-1)^2 + 1.
  std::vector<std::vector<bool>> adj(nv, std::vector<bool>(nv, false));
  for (int e = 0; e < g.num_edges(); ++e) adj[g.edge(e).src][g.edge(e).tgt] = true;
  long bound = static_cast<long>(nv - 1) * (nv - 1) + 1;
  std::vector<std::vector<bool>> pw = adj;
  for (long n = 1; n <= bound; ++n) {
    bool all = true;
    for (int i = 0; i < nv && all; ++i)
      for (int j = 0; j < nv && all; ++j)
        if (!pw[i][j]) all = false;
    if (all) return static_cast<int>(n);
    std::vector<std::vector<bool>> nx(nv, std::vector<bool>(nv, false));
    for (int i = 0; i < nv; ++i)
      for (int k = 0; k < nv; ++k)
        if (pw[i][k])
          for (int j = 0; j < nv; ++j)
            if (adj[k][j]) nx[i][j] = true;
    pw = std::move(nx);
  }
  return std::nullopt;
}

std::vector<int> sinks(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.out_edges(v).empty()) out.push_back(v);
  return out;
}

std::vector<int> sources(const Graph& g) {
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.in_edges(v).empty()) out.push_back(v);
  return out;
}

bool is_acyclic(const Graph& g) {
  int nv = g.num_vertices();
  std::vector<int> state(nv, 0);  // 0 new, 1 on stack, 2 done
  std::function<bool(int)> dfs = [&](int v) -> bool {
    state[v] = 1;
    for (int e : g.out_edges(v)) {
      int w = g.edge(e).tgt;
      if (state[w] == 1) return false;
      if (state[w] == 0 && !dfs(w)) return false;
    }
    state[v] = 2;
    return true;
  };
  for (int v = 0; v < nv; ++v)
    if (state[v] == 0 && !dfs(v)) return false;
  return true;
}

bool has_no_sinks(const Graph& g) { return sinks(g).empty(); }

Graph line_graph(int n) {
  if (n < 1) throw GraphError("line graph needs n >= 1");
  std::vector<std::string> verts;
  for (int i = 0; i <= n; ++i) verts.push_back("z" + std::to_string(i));
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (int i = 1; i <= n; ++i)
    edges.emplace_back("a" + std::to_string(i), "z" + std::to_string(i),
                       "z" + std::to_string(i - 1));
  return Graph(std::move(verts), std::move(edges));
}

int max_path_length_to(const Graph& g, int v) {
  if (v < 0 || v >= g.num_vertices()) throw GraphError("unknown vertex index");
  // Longest path into v over the sub-DAG of vertices that can reach v.
  // memo: -1 unvisited, -2 in progress (cycle detection).
  std::vector<long> memo(g.num_vertices(), -1);
  std::function<long(int)> longest = [&](int u) -> long {
    if (memo[u] == -2) throw GraphError("cycle reaches vertex " + g.vertex_name(v));
    if (memo[u] >= 0) return memo[u];
    memo[u] = -2;
    long best = 0;
    for (int e : g.in_edges(u)) best = std::max(best, 1 + longest(g.edge(e).src));
    memo[u] = best;
    return best;
  };
  return static_cast<int>(longest(v));
}

}  // namespace gradealg
