#include "ncg/graph.hpp"

#include <algorithm>

#include "ncg/structure.hpp"

namespace ncg {

NCGraph noncommuting_graph(const FiniteGroup& g) {
  if (g.is_abelian())
    throw Error(ErrorKind::AbelianGroup, g.name() + " has no non-central elements");
  int n = g.order();

  NCGraph out;
  out.source = g.name();
  out.group_order = n;
  std::vector<int> vertex_of(n, -1);
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (!central) {
      vertex_of[x] = int(out.vertices.size());
      out.vertices.push_back(x);
    }
  }

  int m = out.vertex_count();
  out.adj.assign(m, Bitset(m));
  out.degree.assign(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int x = out.vertices[i], y = out.vertices[j];
      if (g.mul(x, y) != g.mul(y, x)) {
        out.adj[i].set(j);
        out.adj[j].set(i);
        ++out.degree[i];
        ++out.degree[j];
      }
    }

  for (int i = 0; i < m; ++i) {
    int csize = 0;
    for (int y = 0; y < n; ++y)
      if (g.mul(out.vertices[i], y) == g.mul(y, out.vertices[i])) ++csize;
    if (out.degree[i] != n - csize)
      throw Error(ErrorKind::ValidationError, "vertex degree disagrees with centralizer size");
  }
  return out;
}

std::optional<std::vector<int>> multipartite_parts(const NCGraph& g) {
  int m = g.vertex_count();
  if (m == 0) return std::nullopt;
  // In a complete multipartite graph two vertices share a part exactly
  // when their adjacency rows coincide; check that grouping by row gives
  // independent parts that are fully joined to everything outside.
  std::vector<int> part_of(m, -1);
  std::vector<Bitset> part_rows;
  std::vector<Bitset> part_masks;
  for (int v = 0; v < m; ++v) {
    int assigned = -1;
    for (std::size_t p = 0; p < part_rows.size(); ++p)
      if (part_rows[p] == g.adj[v]) {
        assigned = int(p);
        break;
      }
    if (assigned < 0) {
      assigned = int(part_rows.size());
      part_rows.push_back(g.adj[v]);
      part_masks.emplace_back(m);
    }
    part_of[v] = assigned;
    part_masks[assigned].set(v);
  }

  Bitset all(m);
  all.set_all();
  for (int v = 0; v < m; ++v) {
    Bitset expected = all;
    // adjacent to every vertex outside the part, none inside
    part_masks[part_of[v]].for_each([&](int u) { expected.reset(u); });
    if (!(g.adj[v] == expected)) return std::nullopt;
  }

  std::vector<int> sizes;
  sizes.reserve(part_masks.size());
  for (const auto& mask : part_masks) sizes.push_back(mask.count());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

Fingerprint fingerprint(const NCGraph& g) {
  Fingerprint fp;
  fp.vertex_count = g.vertex_count();
  fp.degrees = g.degree;
  std::sort(fp.degrees.begin(), fp.degrees.end());
  fp.parts = multipartite_parts(g);
  fp.edges = g.edge_count();
  long long tri = 0;
  for (int u = 0; u < fp.vertex_count; ++u)
    for (int v = g.adj[u].find_next(u); v >= 0; v = g.adj[u].find_next(v))
      tri += (g.adj[u] & g.adj[v]).count();
  // each triangle is counted once per edge
  fp.triangles = tri / 3;
  return fp;
}

nlohmann::json fingerprint_to_json(const Fingerprint& fp) {
  nlohmann::json j{{"vertices", fp.vertex_count},
                   {"degrees", fp.degrees},
                   {"edges", fp.edges},
                   {"triangles", fp.triangles}};
  if (fp.parts)
    j["parts"] = *fp.parts;
  else
    j["parts"] = nullptr;
  return j;
}

Fingerprint fingerprint_from_json(const nlohmann::json& j) {
  Fingerprint fp;
  fp.vertex_count = j.at("vertices").get<int>();
  fp.degrees = j.at("degrees").get<std::vector<int>>();
  fp.edges = j.at("edges").get<long long>();
  fp.triangles = j.at("triangles").get<long long>();
  if (j.contains("parts") && !j.at("parts").is_null())
    fp.parts = j.at("parts").get<std::vector<int>>();
  return fp;
}

std::string to_dot(const NCGraph& g) {
  std::string out = "graph \"" + g.source + "\" {\n";
  for (int v : g.vertices) out += "  " + std::to_string(v) + ";\n";
  int m = g.vertex_count();
  for (int i = 0; i < m; ++i)
    for (int j = g.adj[i].find_next(i); j >= 0; j = g.adj[i].find_next(j))
      out += "  " + std::to_string(g.vertices[i]) + " -- " +
             std::to_string(g.vertices[j]) + ";\n";
  out += "}\n";
  return out;
}

nlohmann::json graph_to_json(const NCGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  int m = g.vertex_count();
  for (int i = 0; i < m; ++i)
    for (int j = g.adj[i].find_next(i); j >= 0; j = g.adj[i].find_next(j))
      edges.push_back({g.vertices[i], g.vertices[j]});
  return nlohmann::json{{"source", g.source},
                        {"order", g.group_order},
                        {"vertices", g.vertices},
                        {"degrees", g.degree},
                        {"edges", edges}};
}

}  // namespace ncg
