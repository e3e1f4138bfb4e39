#include "ncg/structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "ncg/bitset.hpp"

namespace ncg {

FiniteGroup make_validated_group(int n, std::vector<std::uint16_t> table, std::string name,
                                 std::vector<int> generators);

namespace {

std::vector<int> center_members(const FiniteGroup& g) {
  int n = g.order();
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    bool central = true;
    for (int y = 0; y < n && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) out.push_back(x);
  }
  return out;
}

std::vector<int> centralizer_members(const FiniteGroup& g, int x) {
  int n = g.order();
  std::vector<int> out;
  for (int y = 0; y < n; ++y)
    if (g.mul(x, y) == g.mul(y, x)) out.push_back(y);
  return out;
}

int exact_log(int base, long long value) {
  int e = 0;
  while (value % base == 0) {
    value /= base;
    ++e;
  }
  return value == 1 ? e : -1;
}

std::vector<int> members_of_class_union(const ClassData& cd, const Bitset& classes) {
  std::vector<int> out;
  classes.for_each([&](int ci) {
    out.insert(out.end(), cd.classes[ci].begin(), cd.classes[ci].end());
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Subgroup center(const FiniteGroup& g) { return Subgroup(g, center_members(g)); }

Subgroup centralizer(const FiniteGroup& g, int x) {
  if (x < 0 || x >= g.order()) throw Error(ErrorKind::BadParameter, "element out of range");
  return Subgroup(g, centralizer_members(g, x));
}

std::vector<int> centralizer_in(const FiniteGroup& g, const std::vector<int>& h_members, int x) {
  std::vector<int> out;
  for (int y : h_members)
    if (g.mul(x, y) == g.mul(y, x)) out.push_back(y);
  return out;
}

ClassData conjugacy_classes(const FiniteGroup& g) {
  int n = g.order();
  ClassData cd;
  cd.class_of.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (cd.class_of[x] >= 0) continue;
    int ci = int(cd.classes.size());
    std::vector<int> cls;
    for (int a = 0; a < n; ++a) {
      int y = g.conj(x, a);
      if (cd.class_of[y] < 0) {
        cd.class_of[y] = ci;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    cd.sizes.push_back(int(cls.size()));
    cd.classes.push_back(std::move(cls));
  }
  // Cross-checks: orbit-stabilizer for every element, and the size-1
  // classes must be exactly the center.
  int central = 0;
  for (int x = 0; x < n; ++x) {
    int csize = int(centralizer_members(g, x).size());
    if (csize * cd.sizes[cd.class_of[x]] != n)
      throw Error(ErrorKind::ValidationError, "class size times centralizer size mismatch");
    if (csize == n) ++central;
  }
  cd.center_size = 0;
  for (int s : cd.sizes)
    if (s == 1) ++cd.center_size;
  if (cd.center_size != central)
    throw Error(ErrorKind::ValidationError, "singleton classes disagree with the center");
  return cd;
}

namespace {

std::vector<int> derived_of_members(const FiniteGroup& g, const std::vector<int>& members) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> seeds;
  for (int a : members)
    for (int b : members) {
      int c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        seeds.push_back(c);
      }
    }
  return closure_members(g, seeds);
}

}  // namespace

Subgroup derived_subgroup(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(g, derived_of_members(g, all));
}

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series;
  std::vector<int> cur(g.order());
  std::iota(cur.begin(), cur.end(), 0);
  series.emplace_back(g, cur);
  while (cur.size() > 1) {
    std::vector<int> next = derived_of_members(g, cur);
    if (next == cur) break;
    series.emplace_back(g, next);
    cur = std::move(next);
  }
  return series;
}

bool is_solvable(const FiniteGroup& g) {
  return derived_series(g).back().size() == 1;
}

std::vector<Subgroup> upper_central_series(const FiniteGroup& g) {
  int n = g.order();
  std::vector<Subgroup> series;
  series.emplace_back(g, std::vector<int>{0});
  std::vector<char> zmask(n, 0);
  zmask[0] = 1;
  while (int(series.back().size()) < n) {
    // next = elements whose commutator with everything lands in the
    // previous term.
    std::vector<int> next;
    for (int x = 0; x < n; ++x) {
      bool in = true;
      for (int y = 0; y < n && in; ++y) in = zmask[g.commutator(x, y)];
      if (in) next.push_back(x);
    }
    bool grew = false;
    for (int x : next)
      if (!zmask[x]) grew = true;
    if (!grew) break;
    series.emplace_back(g, next);
    std::fill(zmask.begin(), zmask.end(), 0);
    for (int x : next) zmask[x] = 1;
  }
  return series;
}

std::optional<int> nilpotency_class(const FiniteGroup& g) {
  auto series = upper_central_series(g);
  if (series.back().size() != g.order()) return std::nullopt;
  return int(series.size()) - 1;
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  if (!h.parent().same_group(g))
    throw Error(ErrorKind::BadParameter, "subgroup belongs to a different group");
  for (int a = 0; a < g.order(); ++a)
    for (int x : h.members())
      if (!h.contains(g.conj(x, a))) return false;
  return true;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& g, int order_cap) {
  int n = g.order();
  if (n > order_cap)
    throw Error(ErrorKind::OrderLimitExceeded,
                "normal subgroup search capped at order " + std::to_string(order_cap));
  ClassData cd = conjugacy_classes(g);
  int k = int(cd.classes.size());

  // prod[i][j] = classes met by rep_i * (all of class j); since class
  // products are unions of classes, representatives on the left suffice.
  std::vector<std::vector<Bitset>> prod(k, std::vector<Bitset>(k, Bitset(k)));
  for (int i = 0; i < k; ++i) {
    int rep = cd.classes[i][0];
    for (int j = 0; j < k; ++j)
      for (int y : cd.classes[j]) prod[i][j].set(cd.class_of[g.mul(rep, y)]);
  }

  auto union_size = [&](const Bitset& s) {
    int total = 0;
    s.for_each([&](int ci) { total += cd.sizes[ci]; });
    return total;
  };

  Bitset full(k);
  full.set_all();

  // Close a class set under products. Any subset bigger than |G|/2 can
  // only close to the whole group (Lagrange), short-circuit there.
  auto close = [&](Bitset s) {
    bool changed = true;
    while (changed) {
      changed = false;
      if (union_size(s) * 2 > n) return full;
      Bitset grown = s;
      s.for_each([&](int i) {
        s.for_each([&](int j) { grown |= prod[i][j]; });
      });
      if (!(grown == s)) {
        s = grown;
        changed = true;
      }
    }
    return s;
  };

  std::unordered_set<Bitset, BitsetHash> found;
  std::vector<Bitset> queue;
  Bitset trivial(k);
  trivial.set(cd.class_of[0]);
  found.insert(trivial);
  queue.push_back(trivial);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Bitset cur = queue[head];
    for (int c = 0; c < k; ++c) {
      if (cur.test(c)) continue;
      Bitset seed = cur;
      seed.set(c);
      Bitset closed = close(seed);
      if (found.insert(closed).second) queue.push_back(closed);
    }
  }

  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& s : found) out.emplace_back(g, members_of_class_union(cd, s));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

Quotient quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!n.parent().same_group(g))
    throw Error(ErrorKind::BadParameter, "subgroup belongs to a different group");
  if (!is_normal(g, n)) throw Error(ErrorKind::NotNormal, "subgroup is not normal");

  int order = g.order();
  std::vector<int> coset_of(order, -1);
  std::vector<int> reps;
  for (int x = 0; x < order; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = int(reps.size());
    reps.push_back(x);  // x is the smallest member of its coset
    for (int m : n.members()) coset_of[g.mul(x, m)] = id;
  }

  int q = int(reps.size());
  std::vector<std::uint16_t> table(std::size_t(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      table[std::size_t(a) * q + b] = std::uint16_t(coset_of[g.mul(reps[a], reps[b])]);

  FiniteGroup qg = make_validated_group(
      q, std::move(table), g.name() + "/" + std::to_string(n.size()), {});

  // The projection must be a homomorphism on all of G, not only on
  // representatives.
  for (int x = 0; x < order; ++x)
    for (int y = 0; y < order; ++y)
      if (qg.mul(coset_of[x], coset_of[y]) != coset_of[g.mul(x, y)])
        throw Error(ErrorKind::ValidationError, "quotient projection is not a homomorphism");

  return Quotient{std::move(qg), std::move(coset_of)};
}

Subgroup commutator_with_element(const Subgroup& c, int a) {
  const FiniteGroup& g = c.parent();
  if (a < 0 || a >= g.order()) throw Error(ErrorKind::BadParameter, "element out of range");
  std::vector<int> seeds;
  seeds.reserve(c.size());
  for (int x : c.members()) seeds.push_back(g.mul(g.inv(x), g.conj(x, a)));
  return Subgroup(g, closure_members(g, seeds));
}

CentralizerPartition ac_partition(const FiniteGroup& g) {
  if (g.is_abelian()) throw Error(ErrorKind::AbelianGroup, "no non-central elements");
  int n = g.order();
  std::vector<int> z = center_members(g);
  std::vector<char> zmask(n, 0);
  for (int x : z) zmask[x] = 1;

  CentralizerPartition part;
  std::map<std::vector<int>, int> seen;
  for (int x = 0; x < n; ++x) {
    if (zmask[x]) continue;
    auto cm = centralizer_members(g, x);
    if (seen.emplace(cm, int(part.components.size())).second)
      part.components.emplace_back(g, cm);
  }

  part.is_ac = true;
  for (const auto& comp : part.components)
    if (!comp.is_abelian()) part.is_ac = false;

  if (part.is_ac) {
    // Verify the partition structure the AC condition promises.
    int zsize = int(z.size());
    long long covered = 0;
    std::vector<Bitset> masks;
    for (const auto& comp : part.components) {
      Bitset b(n);
      for (int m : comp.members()) b.set(m);
      masks.push_back(std::move(b));
      covered += comp.size();
    }
    for (std::size_t i = 0; i < masks.size(); ++i)
      for (std::size_t j = i + 1; j < masks.size(); ++j)
        if ((masks[i] & masks[j]).count() != zsize)
          throw Error(ErrorKind::ValidationError,
                      "component intersection differs from the center");
    Bitset all(n);
    for (const auto& m : masks) all |= m;
    for (int x : z) all.set(x);
    if (all.count() != n)
      throw Error(ErrorKind::ValidationError, "components do not cover the group");
    long long w = (long long)part.components.size();
    if ((long long)n != -(w - 1) * zsize + covered)
      throw Error(ErrorKind::ValidationError, "component counting identity failed");
  }
  return part;
}

bool is_ac_group(const FiniteGroup& g) {
  if (g.is_abelian()) return false;
  int n = g.order();
  std::vector<int> z = center_members(g);
  std::vector<char> zmask(n, 0);
  for (int x : z) zmask[x] = 1;
  for (int x = 0; x < n; ++x) {
    if (zmask[x]) continue;
    auto cm = centralizer_members(g, x);
    for (std::size_t i = 0; i < cm.size(); ++i)
      for (std::size_t j = i + 1; j < cm.size(); ++j)
        if (g.mul(cm[i], cm[j]) != g.mul(cm[j], cm[i])) return false;
  }
  return true;
}

namespace {

// Backtracking over seed elements in ascending order; every prefix of a
// complement listed ascending satisfies the pruning conditions, so the
// search is complete.
bool extend_complement(const FiniteGroup& g, const std::vector<char>& nmask, int m,
                       std::vector<int>& k_members, int min_next) {
  if (int(k_members.size()) == m) return true;
  int n = g.order();
  std::vector<char> kmask(n, 0);
  for (int x : k_members) kmask[x] = 1;
  for (int x = min_next; x < n; ++x) {
    if (kmask[x] || nmask[x]) continue;
    if (m % g.element_order(x) != 0) continue;
    std::vector<int> seeds = k_members;
    seeds.push_back(x);
    std::vector<int> grown = closure_members(g, seeds);
    if (int(grown.size()) > m || m % int(grown.size()) != 0) continue;
    bool meets_kernel = false;
    for (int y : grown)
      if (y != 0 && nmask[y]) {
        meets_kernel = true;
        break;
      }
    if (meets_kernel) continue;
    std::vector<int> saved = std::move(k_members);
    k_members = std::move(grown);
    if (extend_complement(g, nmask, m, k_members, x + 1)) return true;
    k_members = std::move(saved);
  }
  return false;
}

}  // namespace

std::optional<FrobeniusStructure> frobenius_structure(const FiniteGroup& g, int order_cap) {
  int n = g.order();
  auto normals = normal_subgroups(g, order_cap);
  // Proper nontrivial candidates, biggest first; ties by member list.
  std::vector<const Subgroup*> cands;
  for (const auto& s : normals)
    if (s.size() > 1 && s.size() < n) cands.push_back(&s);
  std::sort(cands.begin(), cands.end(), [](const Subgroup* a, const Subgroup* b) {
    if (a->size() != b->size()) return a->size() > b->size();
    return a->members() < b->members();
  });

  for (const Subgroup* cand : cands) {
    const Subgroup& nsub = *cand;
    bool kernel_condition = true;
    for (int x : nsub.members()) {
      if (x == 0) continue;
      for (int y = 0; y < n && kernel_condition; ++y)
        if (g.mul(x, y) == g.mul(y, x) && !nsub.contains(y)) kernel_condition = false;
      if (!kernel_condition) break;
    }
    if (!kernel_condition) continue;

    int m = n / nsub.size();
    std::vector<char> nmask(n, 0);
    for (int x : nsub.members()) nmask[x] = 1;
    std::vector<int> k_members{0};
    if (!extend_complement(g, nmask, m, k_members, 1))
      throw Error(ErrorKind::KernelFoundNoComplement,
                  "kernel of order " + std::to_string(nsub.size()) +
                      " admits no complement; this indicates a bug");
    return FrobeniusStructure{nsub, Subgroup(g, k_members)};
  }
  return std::nullopt;
}

PGroupProfile p_group_profile(const FiniteGroup& g) {
  int n = g.order();
  if (n == 1) throw Error(ErrorKind::NotPGroup, "trivial group");
  int p = 0;
  for (int d = 2; d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  int exp = exact_log(p, n);
  if (exp < 0)
    throw Error(ErrorKind::NotPGroup, "order " + std::to_string(n) + " is not a prime power");
  if (g.is_abelian()) throw Error(ErrorKind::AbelianGroup, "profile needs a non-abelian group");

  ClassData cd = conjugacy_classes(g);
  int r = exact_log(p, cd.center_size);
  if (r < 0) throw Error(ErrorKind::ValidationError, "center order is not a power of p");

  std::vector<int> a_list;
  for (int s : cd.sizes) {
    if (s == 1) continue;
    int a = exact_log(p, s);
    if (a < 0) throw Error(ErrorKind::ValidationError, "class size is not a power of p");
    a_list.push_back(a);
  }
  std::sort(a_list.begin(), a_list.end());
  a_list.erase(std::unique(a_list.begin(), a_list.end()), a_list.end());

  if (r < 1 || r >= exp)
    throw Error(ErrorKind::ValidationError, "center exponent out of range");
  for (int a : a_list)
    if (a > exp - r || a >= exp)
      throw Error(ErrorKind::ValidationError, "class size exponent out of range");

  int u = exp - r;
  for (int a : a_list) u = std::gcd(u, a);
  return PGroupProfile{p, exp, r, std::move(a_list), u};
}

FiniteGroup subgroup_as_group(const Subgroup& s, std::string name) {
  const FiniteGroup& g = s.parent();
  int k = s.size();
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < k; ++i) pos[s.members()[i]] = i;
  std::vector<std::uint16_t> table(std::size_t(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[std::size_t(i) * k + j] =
          std::uint16_t(pos[g.mul(s.members()[i], s.members()[j])]);
  if (name.empty()) name = g.name() + "[" + std::to_string(k) + "]";
  return make_validated_group(k, std::move(table), std::move(name), {});
}

}  // namespace ncg
