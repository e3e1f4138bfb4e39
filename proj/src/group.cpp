#include "ncg/group.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

namespace ncg {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotLatinSquare: return "NotLatinSquare";
    case ErrorKind::NoIdentityAtZero: return "NoIdentityAtZero";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoInverse: return "NoInverse";
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::OrderLimitExceeded: return "OrderLimitExceeded";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::NotPGroup: return "NotPGroup";
    case ErrorKind::AbelianGroup: return "AbelianGroup";
    case ErrorKind::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::InvalidIso: return "InvalidIso";
    case ErrorKind::KernelFoundNoComplement: return "KernelFoundNoComplement";
    case ErrorKind::NotACGroup: return "NotACGroup";
    case ErrorKind::NotSolvable: return "NotSolvable";
    case ErrorKind::Unclassifiable: return "Unclassifiable";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "UnknownError";
}

namespace {

constexpr int kExhaustiveAssocLimit = 512;
constexpr int kSampledAssocTriples = 1000000;
constexpr std::uint32_t kAssocSeed = 0x5eed1234u;
constexpr int kTableIndexLimit = 65535;  // storage is 16-bit

int table_at(const std::vector<std::uint16_t>& t, int n, int a, int b) {
  return t[std::size_t(a) * n + b];
}

void check_latin(const std::vector<std::uint16_t>& t, int n) {
  std::vector<char> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int v = table_at(t, n, r, c);
      if (v < 0 || v >= n || seen[v])
        throw Error(ErrorKind::NotLatinSquare,
                    "row " + std::to_string(r) + " is not a permutation");
      seen[v] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int v = table_at(t, n, r, c);
      if (seen[v])
        throw Error(ErrorKind::NotLatinSquare,
                    "column " + std::to_string(c) + " is not a permutation");
      seen[v] = 1;
    }
  }
}

void check_associative(const std::vector<std::uint16_t>& t, int n) {
  auto mul = [&](int a, int b) { return table_at(t, n, a, b); };
  if (n <= kExhaustiveAssocLimit) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = mul(a, b);
        for (int c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c)))
            throw Error(ErrorKind::NotAssociative,
                        "(a*b)*c != a*(b*c) for a=" + std::to_string(a) +
                            " b=" + std::to_string(b) + " c=" + std::to_string(c));
      }
  } else {
    // Beyond the exhaustive limit: one million fixed-seed random triples.
    std::mt19937 rng(kAssocSeed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int i = 0; i < kSampledAssocTriples; ++i) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw Error(ErrorKind::NotAssociative,
                    "(a*b)*c != a*(b*c) for a=" + std::to_string(a) +
                        " b=" + std::to_string(b) + " c=" + std::to_string(c));
    }
  }
}

void check_identity_at_zero(const std::vector<std::uint16_t>& t, int n) {
  for (int e = 0; e < n; ++e) {
    bool left = true, right = true;
    for (int j = 0; j < n && left; ++j) left = table_at(t, n, e, j) == j;
    if (!left) continue;
    for (int i = 0; i < n && right; ++i) right = table_at(t, n, i, e) == i;
    if (!right) continue;
    if (e == 0) return;
    throw Error(ErrorKind::NoIdentityAtZero,
                "identity element is at index " + std::to_string(e));
  }
  throw Error(ErrorKind::NoIdentityAtZero, "no two-sided identity found");
}

std::vector<int> build_inverses(const std::vector<std::uint16_t>& t, int n) {
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table_at(t, n, a, b) == 0) {
        if (table_at(t, n, b, a) != 0)
          throw Error(ErrorKind::NoInverse,
                      "right inverse of " + std::to_string(a) + " is not a left inverse");
        inv[a] = b;
        break;
      }
    if (inv[a] < 0)
      throw Error(ErrorKind::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }
  return inv;
}

bool compute_abelian(const std::vector<std::uint16_t>& t, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (table_at(t, n, a, b) != table_at(t, n, b, a)) return false;
  return true;
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 0x811c9dc5;
    for (int x : v) h = (h ^ std::size_t(x)) * 0x01000193;
    return h;
  }
};

}  // namespace

FiniteGroup make_validated_group(int n, std::vector<std::uint16_t> table,
                                 std::string name, std::vector<int> generators) {
  if (n <= 0) throw Error(ErrorKind::BadParameter, "group order must be positive");
  if (n > kTableIndexLimit)
    throw Error(ErrorKind::OrderLimitExceeded,
                "order " + std::to_string(n) + " exceeds table index limit");
  if (table.size() != std::size_t(n) * n)
    throw Error(ErrorKind::BadParameter, "table size does not match order");
  check_latin(table, n);
  check_associative(table, n);
  check_identity_at_zero(table, n);

  auto impl = std::make_shared<FiniteGroup::Impl>();
  impl->n = n;
  impl->inverses = build_inverses(table, n);
  impl->abelian = compute_abelian(table, n);
  impl->table = std::move(table);
  impl->name = std::move(name);
  impl->generators = std::move(generators);
  return FiniteGroup(std::shared_ptr<const FiniteGroup::Impl>(std::move(impl)));
}

int FiniteGroup::power(int x, int k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  int acc = 0;
  while (k) {
    if (k & 1) acc = mul(acc, x);
    x = mul(x, x);
    k >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(int x) const {
  int k = 1, y = x;
  while (y != 0) {
    y = mul(y, x);
    ++k;
  }
  return k;
}

std::vector<int> FiniteGroup::element_orders() const {
  std::vector<int> out(order());
  for (int x = 0; x < order(); ++x) out[x] = element_order(x);
  return out;
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<int> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (!parent_.valid()) throw Error(ErrorKind::BadParameter, "subgroup needs a parent group");
  int n = parent_.order();
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.empty()) throw Error(ErrorKind::ValidationError, "subgroup is empty");
  if (members_.front() < 0 || members_.back() >= n)
    throw Error(ErrorKind::ValidationError, "subgroup member out of range");
  mask_.assign(n, 0);
  for (int x : members_) mask_[x] = 1;
  if (!mask_[0]) throw Error(ErrorKind::ValidationError, "subgroup lacks the identity");
  for (int x : members_) {
    if (!mask_[parent_.inv(x)])
      throw Error(ErrorKind::ValidationError,
                  "subgroup not closed under inverse at " + std::to_string(x));
    for (int y : members_)
      if (!mask_[parent_.mul(x, y)])
        throw Error(ErrorKind::ValidationError,
                    "subgroup not closed under product at " + std::to_string(x) + "," +
                        std::to_string(y));
  }
  if (n % int(members_.size()) != 0)
    throw Error(ErrorKind::ValidationError, "subgroup size does not divide group order");
}

bool Subgroup::is_abelian() const {
  for (int x : members_)
    for (int y : members_)
      if (parent_.mul(x, y) != parent_.mul(y, x)) return false;
  return true;
}

FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table, std::string name) {
  int n = int(table.size());
  if (n == 0) throw Error(ErrorKind::BadParameter, "empty table");
  std::vector<std::uint16_t> flat(std::size_t(n) * n);
  for (int r = 0; r < n; ++r) {
    if (int(table[r].size()) != n)
      throw Error(ErrorKind::BadParameter, "table is not square at row " + std::to_string(r));
    for (int c = 0; c < n; ++c) {
      int v = table[r][c];
      if (v < 0 || v >= n)
        throw Error(ErrorKind::NotLatinSquare,
                    "row " + std::to_string(r) + " is not a permutation");
      flat[std::size_t(r) * n + c] = std::uint16_t(v);
    }
  }
  return make_validated_group(n, std::move(flat), std::move(name), {});
}

FiniteGroup from_permutation_generators(int degree, const std::vector<std::vector<int>>& gens,
                                        std::string name, int order_cap) {
  if (degree < 1) throw Error(ErrorKind::BadParameter, "degree must be positive");
  for (const auto& g : gens) {
    if (int(g.size()) != degree)
      throw Error(ErrorKind::NotAPermutation, "generator length does not match degree");
    std::vector<char> seen(degree, 0);
    for (int v : g) {
      if (v < 0 || v >= degree || seen[v])
        throw Error(ErrorKind::NotAPermutation, "generator is not a permutation of the points");
      seen[v] = 1;
    }
  }
  int cap = std::min(order_cap, kTableIndexLimit);

  std::vector<int> identity(degree);
  for (int i = 0; i < degree; ++i) identity[i] = i;

  std::vector<std::vector<int>> elems{identity};
  std::unordered_map<std::vector<int>, int, VecHash> index{{identity, 0}};
  // apply a, then b
  auto compose = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(degree);
    for (int i = 0; i < degree; ++i) r[i] = b[a[i]];
    return r;
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (const auto& g : gens) {
      auto next = compose(elems[head], g);
      if (index.emplace(next, int(elems.size())).second) {
        elems.push_back(std::move(next));
        if (int(elems.size()) > cap)
          throw Error(ErrorKind::OrderLimitExceeded,
                      "closure exceeds order cap " + std::to_string(cap));
      }
    }
  }

  int n = int(elems.size());
  std::vector<std::uint16_t> flat(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[std::size_t(a) * n + b] = std::uint16_t(index.at(compose(elems[a], elems[b])));

  std::vector<int> gen_indices;
  gen_indices.reserve(gens.size());
  for (const auto& g : gens) gen_indices.push_back(index.at(g));
  std::sort(gen_indices.begin(), gen_indices.end());
  gen_indices.erase(std::unique(gen_indices.begin(), gen_indices.end()), gen_indices.end());

  return make_validated_group(n, std::move(flat), std::move(name), std::move(gen_indices));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::string name,
                           int order_cap) {
  if (!g.valid() || !h.valid()) throw Error(ErrorKind::BadParameter, "invalid factor");
  long long n = (long long)g.order() * h.order();
  int cap = std::min(order_cap, kTableIndexLimit);
  if (n > cap)
    throw Error(ErrorKind::OrderLimitExceeded,
                "product order " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  int hn = h.order();
  int total = int(n);
  std::vector<std::uint16_t> flat(std::size_t(total) * total);
  for (int a = 0; a < total; ++a) {
    int ga = a / hn, ha = a % hn;
    for (int b = 0; b < total; ++b) {
      int gb = b / hn, hb = b % hn;
      flat[std::size_t(a) * total + b] =
          std::uint16_t(g.mul(ga, gb) * hn + h.mul(ha, hb));
    }
  }
  if (name.empty()) name = g.name() + "x" + h.name();
  return make_validated_group(total, std::move(flat), std::move(name), {});
}

std::vector<int> closure_members(const FiniteGroup& g, const std::vector<int>& seed) {
  int n = g.order();
  std::vector<char> mask(n, 0);
  std::vector<int> members;
  auto add = [&](int x) {
    if (!mask[x]) {
      mask[x] = 1;
      members.push_back(x);
    }
  };
  add(0);
  for (int x : seed) {
    if (x < 0 || x >= n) throw Error(ErrorKind::BadParameter, "seed element out of range");
    add(x);
  }
  // Finite, so closing under products alone also captures inverses.
  for (std::size_t head = 0; head < members.size(); ++head) {
    int x = members[head];
    for (std::size_t i = 0; i <= head; ++i) {
      add(g.mul(x, members[i]));
      add(g.mul(members[i], x));
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed) {
  return Subgroup(g, closure_members(g, seed));
}

}  // namespace ncg
