#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncg/bitset.hpp"
#include "ncg/group.hpp"

namespace ncg {

/// Simple undirected graph on the non-central elements of a group.
/// `vertices[i]` is the group element at vertex position i; adjacency is
/// over positions. Plain aggregate so tests can also build ad-hoc graphs.
struct NCGraph {
  std::string source;
  int group_order = 0;
  std::vector<int> vertices;
  std::vector<Bitset> adj;
  std::vector<int> degree;

  int vertex_count() const { return int(vertices.size()); }
  bool adjacent(int i, int j) const { return adj[i].test(j); }
  long long edge_count() const {
    long long d = 0;
    for (int x : degree) d += x;
    return d / 2;
  }
};

/// Vertices are the non-central elements in ascending index order; an
/// edge joins two elements that do not commute. Verifies
/// degree(x) = |G| - |centralizer(x)| for every vertex.
NCGraph noncommuting_graph(const FiniteGroup& g);

/// Part sizes (sorted ascending) when the graph is complete multipartite,
/// i.e. non-adjacency is an equivalence relation; nullopt otherwise.
std::optional<std::vector<int>> multipartite_parts(const NCGraph& g);

/// Exact maximum clique size via branch and bound with a greedy coloring
/// bound. Raises SizeLimitExceeded above the vertex cap.
int max_clique(const NCGraph& g, int vertex_cap = 200);

/// Vertex bijection g1 -> g2 over vertex positions.
struct IsoMap {
  std::vector<int> forward;
};

/// Exhaustive certificate check: bijectivity plus edge preservation over
/// all vertex pairs.
bool verify_isomorphism(const NCGraph& g1, const NCGraph& g2, const IsoMap& map);

/// Graph isomorphism. Complete multipartite pairs are matched by part
/// sizes; the general path runs color refinement plus backtracking
/// (candidate targets visited in ascending vertex order) and is capped at
/// `vertex_cap` vertices. Any returned map has been re-verified.
std::optional<IsoMap> are_isomorphic(const NCGraph& g1, const NCGraph& g2,
                                     int vertex_cap = 2000);

/// Cheap invariant bundle used to pre-bucket graphs before isomorphism.
struct Fingerprint {
  int vertex_count = 0;
  std::vector<int> degrees;               // sorted ascending
  std::optional<std::vector<int>> parts;  // sorted ascending, if multipartite
  long long edges = 0;
  long long triangles = 0;

  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const NCGraph& g);

nlohmann::json fingerprint_to_json(const Fingerprint& fp);
Fingerprint fingerprint_from_json(const nlohmann::json& j);

/// DOT text: vertex lines then edge lines, both by ascending element index.
std::string to_dot(const NCGraph& g);

/// {"source", "order", "vertices", "degrees", "edges"} with element
/// indices; edges as [u, v] pairs, u < v, sorted.
nlohmann::json graph_to_json(const NCGraph& g);

}  // namespace ncg
