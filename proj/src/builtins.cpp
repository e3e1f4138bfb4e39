#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ncg/catalog.hpp"
#include "ncg/errors.hpp"
#include "ncg/group.hpp"

namespace ncg {

namespace {

FiniteGroup frobenius20() {
  // <(0 1 2 3 4), (1 2 4 3)> = C5 : C4, the holomorph of C5.
  return from_permutation_generators(5, {{1, 2, 3, 4, 0}, {0, 2, 4, 1, 3}}, "f20");
}

FiniteGroup generalized_dihedral18() {
  // Dih(C3 x C3): two commuting 3-cycles plus the inverting involution.
  return from_permutation_generators(
      6, {{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}, {0, 2, 1, 3, 5, 4}}, "gd18");
}

FiniteGroup named_product(const std::string& name, Family fa, int pa, Family fb, int pb) {
  return direct_product(standard_family(fa, pa), standard_family(fb, pb), name);
}

const std::map<std::string, std::function<FiniteGroup()>>& witness_registry() {
  static const std::map<std::string, std::function<FiniteGroup()>> reg = {
      {"f20", frobenius20},
      {"gd18", generalized_dihedral18},
      {"c2xd4",
       [] { return named_product("c2xd4", Family::cyclic, 2, Family::dihedral, 4); }},
      {"c2xq8",
       [] { return named_product("c2xq8", Family::cyclic, 2, Family::dicyclic, 2); }},
      {"c3xd4",
       [] { return named_product("c3xd4", Family::cyclic, 3, Family::dihedral, 4); }},
      {"c3xq8",
       [] { return named_product("c3xq8", Family::cyclic, 3, Family::dicyclic, 2); }},
  };
  return reg;
}

int parse_param(const std::string& spec, std::size_t colon) {
  const std::string tail = spec.substr(colon + 1);
  if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorKind::BadParameter, "bad numeric parameter in '" + spec + "'");
  long v = std::strtol(tail.c_str(), nullptr, 10);
  if (v <= 0 || v > 1000000)
    throw Error(ErrorKind::BadParameter, "parameter out of range in '" + spec + "'");
  return static_cast<int>(v);
}

bool wants(const std::vector<std::string>& families, const std::string& key) {
  if (families.empty()) return true;
  for (const auto& f : families)
    if (f == key || f == "all" || f == "builtin") return true;
  return false;
}

}  // namespace

FiniteGroup make_group(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) {
    const auto& reg = witness_registry();
    auto it = reg.find(spec);
    if (it == reg.end())
      throw Error(ErrorKind::BadParameter, "unknown group '" + spec + "'");
    return it->second();
  }
  const std::string family = spec.substr(0, colon);
  const int p = parse_param(spec, colon);
  if (family == "cyclic") return standard_family(Family::cyclic, p);
  if (family == "dihedral") return standard_family(Family::dihedral, p);
  if (family == "dicyclic") return standard_family(Family::dicyclic, p);
  if (family == "symmetric") return standard_family(Family::symmetric, p);
  if (family == "alternating") return standard_family(Family::alternating, p);
  if (family == "heisenberg") return standard_family(Family::heisenberg, p);
  if (family == "gl2") return matrix_group(MatrixKind::gl, 2, p);
  if (family == "sl2") return matrix_group(MatrixKind::sl, 2, p);
  throw Error(ErrorKind::BadParameter, "unknown family '" + family + "'");
}

const std::vector<std::string>& builtin_family_keywords() {
  static const std::vector<std::string> keys = {
      "dihedral", "dicyclic", "symmetric", "alternating",
      "heisenberg", "matrix", "witnesses"};
  return keys;
}

std::vector<FiniteGroup> builtin_catalog(int max_order,
                                         const std::vector<std::string>& families) {
  for (const auto& f : families) {
    const auto& keys = builtin_family_keywords();
    if (f != "all" && f != "builtin" &&
        std::find(keys.begin(), keys.end(), f) == keys.end())
      throw Error(ErrorKind::BadParameter, "unknown family keyword '" + f + "'");
  }

  std::vector<FiniteGroup> out;
  if (wants(families, "dihedral"))
    for (int n = 3; 2 * n <= max_order; ++n)
      out.push_back(standard_family(Family::dihedral, n));
  if (wants(families, "dicyclic"))
    for (int n = 2; 4 * n <= max_order; ++n)
      out.push_back(standard_family(Family::dicyclic, n));
  if (wants(families, "symmetric")) {
    for (int n = 3, fact = 6; n <= 7; ++n, fact *= n)
      if (fact <= max_order) out.push_back(standard_family(Family::symmetric, n));
  }
  if (wants(families, "alternating")) {
    for (int n = 4, half = 12; n <= 7; ++n, half *= n)
      if (half <= max_order) out.push_back(standard_family(Family::alternating, n));
  }
  if (wants(families, "heisenberg")) {
    for (int p : {3, 5, 7})
      if (p * p * p <= max_order) out.push_back(standard_family(Family::heisenberg, p));
  }
  if (wants(families, "matrix")) {
    struct M {
      MatrixKind kind;
      int p;
      int order;
    };
    for (const M& m : {M{MatrixKind::sl, 3, 24}, M{MatrixKind::gl, 3, 48},
                       M{MatrixKind::sl, 5, 120}, M{MatrixKind::gl, 5, 480}})
      if (m.order <= max_order) out.push_back(matrix_group(m.kind, 2, m.p));
  }
  if (wants(families, "witnesses")) {
    for (const auto& [name, make] : witness_registry()) {
      FiniteGroup g = make();
      if (g.order() <= max_order) out.push_back(std::move(g));
    }
  }

  std::sort(out.begin(), out.end(), [](const FiniteGroup& a, const FiniteGroup& b) {
    return a.name() < b.name();
  });
  return out;
}

}  // namespace ncg
