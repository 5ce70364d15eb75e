#ifndef GRADEALG_GRAPH_HPP
#define GRADEALG_GRAPH_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradealg {

struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite directed multigraph. Vertex and edge order is declaration order
// and is part of the contract: it fixes matrix-unit indexing and the
// per-vertex edge enumeration used by CK2 rewriting downstream.
class Graph {
 public:
  struct Edge {
    std::string name;
    int src, tgt;
  };

  Graph(std::vector<std::string> vertices,
        std::vector<std::tuple<std::string, std::string, std::string>> edges);

  int num_vertices() const { return static_cast<int>(vnames_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::string& vertex_name(int v) const { return vnames_[v]; }
  const Edge& edge(int e) const { return edges_[e]; }
  std::optional<int> vertex_index(const std::string& name) const;
  std::optional<int> edge_index(const std::string& name) const;
  // Edges emitted by v, in declaration order.
  const std::vector<int>& out_edges(int v) const { return out_[v]; }
  const std::vector<int>& in_edges(int v) const { return in_[v]; }

 private:
  std::vector<std::string> vnames_;
  std::vector<Edge> edges_;
  std::map<std::string, int> vindex_, eindex_;
  std::vector<std::vector<int>> out_, in_;
};

// Path in a graph; edges compose left to right. Length 0 paths are anchored
// at a vertex.
struct GPath {
  int src = 0;
  std::vector<int> edges;

  int length() const { return static_cast<int>(edges.size()); }
  int source() const { return src; }
  int range(const Graph& g) const {
    return edges.empty() ? src : g.edge(edges.back()).tgt;
  }
  bool operator==(const GPath& o) const { return src == o.src && edges == o.edges; }
  bool operator<(const GPath& o) const {
    if (src != o.src) return src < o.src;
    return edges < o.edges;
  }
  std::string str(const Graph& g) const;
};

// Graph JSON schema:
//   {"vertices": ["v", ...],
//    "edges": [{"name": "e", "src": "v", "tgt": "w"}, ...]}
Graph load_graph(const std::string& json_text);
Graph load_graph_file(const std::string& path);
std::string graph_to_json(const Graph& g);

std::vector<GPath> paths_of_length(const Graph& g, int n,
                                   std::optional<int> source = std::nullopt,
                                   std::optional<int> range = std::nullopt);

// Least n such that every ordered vertex pair is joined by a path of length
// exactly n, searched up to the Wielandt bound (|V|-1)^2 + 1; nullopt when
// no such n exists.
std::optional<int> primitivity_length(const Graph& g);

std::vector<int> sinks(const Graph& g);
std::vector<int> sources(const Graph& g);
bool is_acyclic(const Graph& g);
bool has_no_sinks(const Graph& g);

// G_n: vertices z_0..z_n, one edge z_i -> z_{i-1}.
Graph line_graph(int n);

// Longest path length ending at v. Throws if a cycle can reach v.
int max_path_length_to(const Graph& g, int v);

}  // namespace gradealg

#endif
