#include <algorithm>
#include <numeric>

#include "ncg/graph.hpp"

namespace ncg {

namespace {

// Branch and bound in the style of Tomita's MCQ: candidates are greedily
// colored, the color index bounds any clique extension, and branches are
// explored from the highest color down.
class CliqueSolver {
 public:
  explicit CliqueSolver(const NCGraph& g) {
    m_ = g.vertex_count();
    // Highest degree first gives the coloring a strong start.
    std::vector<int> order(m_);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree[a] > g.degree[b]; });
    std::vector<int> pos(m_);
    for (int i = 0; i < m_; ++i) pos[order[i]] = i;
    adj_.assign(m_, Bitset(m_));
    for (int i = 0; i < m_; ++i)
      for (int j = i + 1; j < m_; ++j)
        if (g.adjacent(i, j)) {
          adj_[pos[i]].set(pos[j]);
          adj_[pos[j]].set(pos[i]);
        }
  }

  int solve() {
    if (m_ == 0) return 0;
    best_ = 0;
    Bitset all(m_);
    all.set_all();
    expand(0, all);
    return best_;
  }

 private:
  void expand(int size, Bitset cand) {
    if (cand.none()) {
      best_ = std::max(best_, size);
      return;
    }
    // Greedy coloring; seq ends up sorted by color ascending.
    std::vector<std::pair<int, int>> seq;
    seq.reserve(cand.count());
    Bitset uncolored = cand;
    int color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset cls = uncolored;
      while (cls.any()) {
        int v = cls.find_first();
        seq.emplace_back(v, color);
        uncolored.reset(v);
        cls.reset(v);
        cls &= ~adj_[v];
      }
    }
    for (int i = int(seq.size()) - 1; i >= 0; --i) {
      auto [v, c] = seq[i];
      if (size + c <= best_) return;  // colors only shrink leftwards
      cand.reset(v);
      Bitset next = cand & adj_[v];
      if (next.none())
        best_ = std::max(best_, size + 1);
      else
        expand(size + 1, next);
    }
  }

  int m_ = 0;
  std::vector<Bitset> adj_;
  int best_ = 0;
};

}  // namespace

int max_clique(const NCGraph& g, int vertex_cap) {
  if (g.vertex_count() > vertex_cap)
    throw Error(ErrorKind::SizeLimitExceeded,
                "clique search capped at " + std::to_string(vertex_cap) + " vertices (got " +
                    std::to_string(g.vertex_count()) + ")");
  return CliqueSolver(g).solve();
}

}  // namespace ncg
