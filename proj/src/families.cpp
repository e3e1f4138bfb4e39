#include <algorithm>
#include <array>
#include <numeric>
#include <unordered_map>

#include "ncg/group.hpp"

namespace ncg {

FiniteGroup make_validated_group(int n, std::vector<std::uint16_t> table, std::string name,
                                 std::vector<int> generators);

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int mod(int a, int m) { return ((a % m) + m) % m; }

FiniteGroup cyclic_group(int n) {
  std::vector<std::uint16_t> t(std::size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[std::size_t(i) * n + j] = std::uint16_t((i + j) % n);
  return make_validated_group(n, std::move(t), "cyclic:" + std::to_string(n), {n > 1 ? 1 : 0});
}

// Index i < n is r^i, index n+i is s*r^i, with s*r*s = r^-1.
FiniteGroup dihedral_group(int n) {
  int total = 2 * n;
  std::vector<std::uint16_t> t(std::size_t(total) * total);
  auto at = [&](int a, int b) -> std::uint16_t& { return t[std::size_t(a) * total + b]; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      at(i, j) = std::uint16_t((i + j) % n);              // r^i * r^j
      at(i, n + j) = std::uint16_t(n + mod(j - i, n));    // r^i * s r^j = s r^(j-i)
      at(n + i, j) = std::uint16_t(n + (i + j) % n);      // s r^i * r^j
      at(n + i, n + j) = std::uint16_t(mod(j - i, n));    // s r^i * s r^j = r^(j-i)
    }
  return make_validated_group(total, std::move(t), "dihedral:" + std::to_string(n),
                              n > 1 ? std::vector<int>{1, n} : std::vector<int>{n});
}

// Index i < 2n is a^i, index 2n+i is a^i*b, with b^2 = a^n and b a b^-1 = a^-1.
FiniteGroup dicyclic_group(int n) {
  int m = 2 * n, total = 4 * n;
  std::vector<std::uint16_t> t(std::size_t(total) * total);
  auto at = [&](int a, int b) -> std::uint16_t& { return t[std::size_t(a) * total + b]; };
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      at(i, j) = std::uint16_t((i + j) % m);
      at(i, m + j) = std::uint16_t(m + (i + j) % m);          // a^i * a^j b
      at(m + i, j) = std::uint16_t(m + mod(i - j, m));        // a^i b * a^j = a^(i-j) b
      at(m + i, m + j) = std::uint16_t(mod(i - j + n, m));    // a^i b * a^j b = a^(i-j+n)
    }
  return make_validated_group(total, std::move(t), "dicyclic:" + std::to_string(n), {1, m});
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 0x811c9dc5;
    for (int x : v) h = (h ^ std::size_t(x)) * 0x01000193;
    return h;
  }
};

bool is_even_permutation(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

// Lexicographic enumeration keeps the identity at index 0 for both families.
FiniteGroup permutation_family(int n, bool even_only, const std::string& name) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> elems;
  std::unordered_map<std::vector<int>, int, VecHash> index;
  do {
    if (even_only && !is_even_permutation(p)) continue;
    index.emplace(p, int(elems.size()));
    elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  int total = int(elems.size());
  std::vector<std::uint16_t> t(std::size_t(total) * total);
  std::vector<int> r(n);
  for (int a = 0; a < total; ++a)
    for (int b = 0; b < total; ++b) {
      for (int i = 0; i < n; ++i) r[i] = elems[b][elems[a][i]];  // apply a, then b
      t[std::size_t(a) * total + b] = std::uint16_t(index.at(r));
    }
  return make_validated_group(total, std::move(t), name, {});
}

// Upper unitriangular 3x3 matrices over F_p: (a,b,c) = [[1,a,c],[0,1,b],[0,0,1]],
// indexed as a*p^2 + b*p + c, so the identity (0,0,0) is index 0.
FiniteGroup heisenberg_group(int p) {
  int total = p * p * p;
  std::vector<std::uint16_t> t(std::size_t(total) * total);
  for (int a1 = 0; a1 < p; ++a1)
    for (int b1 = 0; b1 < p; ++b1)
      for (int c1 = 0; c1 < p; ++c1) {
        int x = (a1 * p + b1) * p + c1;
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2) {
              int y = (a2 * p + b2) * p + c2;
              int a = (a1 + a2) % p, b = (b1 + b2) % p, c = (c1 + c2 + a1 * b2) % p;
              t[std::size_t(x) * total + y] = std::uint16_t((a * p + b) * p + c);
            }
      }
  return make_validated_group(total, std::move(t), "heisenberg:" + std::to_string(p),
                              {p * p, p});
}

}  // namespace

FiniteGroup standard_family(Family family, int param) {
  switch (family) {
    case Family::cyclic:
      if (param < 1) throw Error(ErrorKind::BadParameter, "cyclic needs n >= 1");
      return cyclic_group(param);
    case Family::dihedral:
      if (param < 1) throw Error(ErrorKind::BadParameter, "dihedral needs n >= 1");
      return dihedral_group(param);
    case Family::dicyclic:
      if (param < 2) throw Error(ErrorKind::BadParameter, "dicyclic needs n >= 2");
      return dicyclic_group(param);
    case Family::symmetric:
      if (param < 1 || param > 7)
        throw Error(ErrorKind::BadParameter, "symmetric needs 1 <= n <= 7");
      return permutation_family(param, false, "symmetric:" + std::to_string(param));
    case Family::alternating:
      if (param < 1 || param > 7)
        throw Error(ErrorKind::BadParameter, "alternating needs 1 <= n <= 7");
      return permutation_family(param, true, "alternating:" + std::to_string(param));
    case Family::heisenberg:
      if (param == 2 || !is_prime(param))
        throw Error(ErrorKind::BadParameter, "heisenberg needs an odd prime");
      if (param * param * param > kDefaultOrderCap)
        throw Error(ErrorKind::OrderLimitExceeded, "heisenberg order exceeds cap");
      return heisenberg_group(param);
  }
  throw Error(ErrorKind::BadParameter, "unknown family");
}

FiniteGroup matrix_group(MatrixKind kind, int dim, int p, int order_cap) {
  if (dim != 2) throw Error(ErrorKind::BadParameter, "only dimension 2 is supported");
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p > 13) throw Error(ErrorKind::BadParameter, "p must be at most 13");

  long long expected = (long long)(p * p - 1) * (p * p - p);
  if (kind == MatrixKind::sl) expected /= (p - 1);
  if (expected > order_cap)
    throw Error(ErrorKind::OrderLimitExceeded,
                "group order " + std::to_string(expected) + " exceeds cap " +
                    std::to_string(order_cap));

  // Identity first, remaining matrices in lexicographic (a,b,c,d) order.
  std::vector<std::array<int, 4>> elems;
  std::vector<int> index(std::size_t(p) * p * p * p, -1);
  auto flat = [&](int a, int b, int c, int d) { return ((a * p + b) * p + c) * p + d; };
  auto keep = [&](int det) {
    return kind == MatrixKind::gl ? det != 0 : det == 1;
  };
  elems.push_back({1, 0, 0, 1});
  index[flat(1, 0, 0, 1)] = 0;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d) {
          if (a == 1 && b == 0 && c == 0 && d == 1) continue;
          if (!keep(mod(a * d - b * c, p))) continue;
          index[flat(a, b, c, d)] = int(elems.size());
          elems.push_back({a, b, c, d});
        }

  int total = int(elems.size());
  std::vector<std::uint16_t> t(std::size_t(total) * total);
  for (int x = 0; x < total; ++x) {
    const auto& m1 = elems[x];
    for (int y = 0; y < total; ++y) {
      const auto& m2 = elems[y];
      int a = mod(m1[0] * m2[0] + m1[1] * m2[2], p);
      int b = mod(m1[0] * m2[1] + m1[1] * m2[3], p);
      int c = mod(m1[2] * m2[0] + m1[3] * m2[2], p);
      int d = mod(m1[2] * m2[1] + m1[3] * m2[3], p);
      t[std::size_t(x) * total + y] = std::uint16_t(index[flat(a, b, c, d)]);
    }
  }
  std::string name = (kind == MatrixKind::gl ? "gl2:" : "sl2:") + std::to_string(p);
  return make_validated_group(total, std::move(t), std::move(name), {});
}

}  // namespace ncg
