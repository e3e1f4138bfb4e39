#include <algorithm>
#include <map>
#include <numeric>

#include "ncg/graph.hpp"

namespace ncg {

bool verify_isomorphism(const NCGraph& g1, const NCGraph& g2, const IsoMap& map) {
  int m = g1.vertex_count();
  if (g2.vertex_count() != m || int(map.forward.size()) != m) return false;
  std::vector<char> hit(m, 0);
  for (int t : map.forward) {
    if (t < 0 || t >= m || hit[t]) return false;
    hit[t] = 1;
  }
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (g1.adjacent(i, j) != g2.adjacent(map.forward[i], map.forward[j])) return false;
  return true;
}

namespace {

std::vector<std::vector<int>> rows_to_parts(const NCGraph& g) {
  // Valid grouping only for complete multipartite graphs, where equal
  // adjacency rows characterize a shared part.
  std::vector<std::vector<int>> parts;
  std::vector<Bitset> rows;
  for (int v = 0; v < g.vertex_count(); ++v) {
    bool placed = false;
    for (std::size_t p = 0; p < rows.size(); ++p)
      if (rows[p] == g.adj[v]) {
        parts[p].push_back(v);
        placed = true;
        break;
      }
    if (!placed) {
      rows.push_back(g.adj[v]);
      parts.push_back({v});
    }
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return parts;
}

std::optional<IsoMap> multipartite_match(const NCGraph& g1, const NCGraph& g2) {
  auto parts1 = rows_to_parts(g1);
  auto parts2 = rows_to_parts(g2);
  IsoMap map;
  map.forward.assign(g1.vertex_count(), -1);
  for (std::size_t p = 0; p < parts1.size(); ++p)
    for (std::size_t i = 0; i < parts1[p].size(); ++i)
      map.forward[parts1[p][i]] = parts2[p][i];
  if (!verify_isomorphism(g1, g2, map))
    throw Error(ErrorKind::ValidationError, "multipartite matching produced a bad map");
  return map;
}

// Joint 1-dimensional color refinement. Returns false when the color
// histograms of the two graphs separate (no isomorphism possible).
bool refine_colors(const NCGraph& g1, const NCGraph& g2, std::vector<int>& c1,
                   std::vector<int>& c2) {
  int m = g1.vertex_count();
  c1 = g1.degree;
  c2 = g2.degree;
  int colors = -1;
  while (true) {
    // signature = own color plus sorted neighbor colors
    auto signature = [&](const NCGraph& g, const std::vector<int>& c, int v) {
      std::vector<int> sig{c[v]};
      g.adj[v].for_each([&](int u) { sig.push_back(c[u]); });
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sig1(m), sig2(m);
    for (int v = 0; v < m; ++v) {
      sig1[v] = signature(g1, c1, v);
      sig2[v] = signature(g2, c2, v);
      ids.emplace(sig1[v], 0);
      ids.emplace(sig2[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> h1(next, 0), h2(next, 0);
    for (int v = 0; v < m; ++v) {
      c1[v] = ids.at(sig1[v]);
      c2[v] = ids.at(sig2[v]);
      ++h1[c1[v]];
      ++h2[c2[v]];
    }
    if (h1 != h2) return false;
    if (next == colors) return true;  // partition stable
    colors = next;
  }
}

class IsoSearch {
 public:
  IsoSearch(const NCGraph& g1, const NCGraph& g2, const std::vector<int>& c1,
            const std::vector<int>& c2)
      : g1_(g1), g2_(g2), c1_(c1), c2_(c2) {}

  std::optional<IsoMap> run() {
    int m = g1_.vertex_count();
    forward_.assign(m, -1);
    used_.assign(m, 0);
    // Most constrained first: smallest color class, then color, then index.
    std::vector<int> class_size(m, 0);
    std::vector<int> hist;
    for (int v = 0; v < m; ++v) {
      if (int(hist.size()) <= c1_[v]) hist.resize(c1_[v] + 1, 0);
      ++hist[c1_[v]];
    }
    for (int v = 0; v < m; ++v) class_size[v] = hist[c1_[v]];
    order_.resize(m);
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      if (class_size[a] != class_size[b]) return class_size[a] < class_size[b];
      if (c1_[a] != c1_[b]) return c1_[a] < c1_[b];
      return a < b;
    });
    if (!place(0)) return std::nullopt;
    return IsoMap{forward_};
  }

 private:
  bool place(int depth) {
    if (depth == int(order_.size())) return true;
    int v = order_[depth];
    for (int u = 0; u < g2_.vertex_count(); ++u) {  // ascending target order
      if (used_[u] || c2_[u] != c1_[v]) continue;
      bool ok = true;
      for (int d = 0; d < depth && ok; ++d) {
        int w = order_[d];
        ok = g1_.adjacent(v, w) == g2_.adjacent(u, forward_[w]);
      }
      if (!ok) continue;
      forward_[v] = u;
      used_[u] = 1;
      if (place(depth + 1)) return true;
      forward_[v] = -1;
      used_[u] = 0;
    }
    return false;
  }

  const NCGraph& g1_;
  const NCGraph& g2_;
  const std::vector<int>& c1_;
  const std::vector<int>& c2_;
  std::vector<int> forward_;
  std::vector<char> used_;
  std::vector<int> order_;
};

}  // namespace

std::optional<IsoMap> are_isomorphic(const NCGraph& g1, const NCGraph& g2, int vertex_cap) {
  if (g1.vertex_count() != g2.vertex_count()) return std::nullopt;
  std::vector<int> d1 = g1.degree, d2 = g2.degree;
  std::sort(d1.begin(), d1.end());
  std::sort(d2.begin(), d2.end());
  if (d1 != d2) return std::nullopt;

  auto p1 = multipartite_parts(g1);
  auto p2 = multipartite_parts(g2);
  if (p1.has_value() != p2.has_value()) return std::nullopt;
  if (p1 && p2) {
    if (*p1 != *p2) return std::nullopt;
    return multipartite_match(g1, g2);
  }

  if (g1.vertex_count() > vertex_cap)
    throw Error(ErrorKind::SizeLimitExceeded,
                "isomorphism search capped at " + std::to_string(vertex_cap) +
                    " vertices (got " + std::to_string(g1.vertex_count()) + ")");

  std::vector<int> c1, c2;
  if (!refine_colors(g1, g2, c1, c2)) return std::nullopt;
  auto map = IsoSearch(g1, g2, c1, c2).run();
  if (map && !verify_isomorphism(g1, g2, *map))
    throw Error(ErrorKind::ValidationError, "isomorphism search produced a bad map");
  return map;
}

}  // namespace ncg
