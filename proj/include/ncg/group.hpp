#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ncg/errors.hpp"

namespace ncg {

/// Default ceiling for constructed group orders (permutation closure,
/// matrix enumeration, direct products). Constructors take it as a
/// parameter so callers can lower or raise it per call.
inline constexpr int kDefaultOrderCap = 20000;

/// A finite group as a Cayley table over element indices 0..order-1 with
/// the identity at index 0. Immutable after construction; copies share
/// the underlying table, so copying is cheap and never invalidates
/// subgroups pointing at the same group.
///
/// Every constructor validates the full invariant suite: Latin square,
/// associativity (exhaustive up to order 512, one million fixed-seed
/// random triples beyond that), identity at index 0, two-sided inverses.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  int order() const { return impl_->n; }
  const std::string& name() const { return impl_->name; }

  int mul(int a, int b) const { return impl_->table[std::size_t(a) * impl_->n + b]; }
  int inv(int a) const { return impl_->inverses[a]; }

  /// x^a = a^-1 * x * a
  int conj(int x, int a) const { return mul(mul(inv(a), x), a); }

  /// [x, y] = x^-1 * y^-1 * x * y
  int commutator(int x, int y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }

  int power(int x, int k) const;
  int element_order(int x) const;
  bool is_abelian() const { return impl_->abelian; }

  /// Indices of a known generating set (closure-based constructors record
  /// the elements their input generators landed on; empty otherwise).
  const std::vector<int>& generators() const { return impl_->generators; }

  /// Per-element orders, indexed by element.
  std::vector<int> element_orders() const;

  /// True when both handles share one underlying table (object identity,
  /// not isomorphism). Subgroup operations use this to reject subgroups
  /// of a different parent.
  bool same_group(const FiniteGroup& o) const { return impl_ == o.impl_; }

  bool valid() const { return impl_ != nullptr; }

 private:
  struct Impl {
    int n = 0;
    std::vector<std::uint16_t> table;  // flat, row-major: table[a*n+b] = a*b
    std::vector<int> inverses;
    std::string name;
    std::vector<int> generators;
    bool abelian = false;
  };

  explicit FiniteGroup(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;

  friend FiniteGroup make_validated_group(int n, std::vector<std::uint16_t> table,
                                          std::string name, std::vector<int> generators);
};

/// A subgroup of a fixed parent group: sorted member indices plus a
/// membership mask. Construction verifies 0 is a member, closure under
/// multiplication and inverse, and that the size divides the parent order.
class Subgroup {
 public:
  Subgroup(FiniteGroup parent, std::vector<int> members);

  const FiniteGroup& parent() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return int(members_.size()); }
  bool contains(int x) const { return mask_[x] != 0; }
  bool is_abelian() const;

  bool operator==(const Subgroup& o) const {
    return parent_.same_group(o.parent_) && members_ == o.members_;
  }

 private:
  FiniteGroup parent_;
  std::vector<int> members_;
  std::vector<char> mask_;
};

/// Builds a group from an explicit Cayley table. The table must already
/// have the identity at index 0; a valid table whose identity sits
/// elsewhere raises NoIdentityAtZero reporting where it was found.
FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& table,
                              std::string name = "table");

/// Enumerates the group generated by permutations of 0..degree-1 (orbit of
/// the identity under right multiplication, breadth first, so indexing is
/// deterministic and the identity gets index 0), then tabulates it.
/// Composition convention: (a*b)(x) = b(a(x)), "apply a, then b".
FiniteGroup from_permutation_generators(int degree,
                                        const std::vector<std::vector<int>>& gens,
                                        std::string name = "perm",
                                        int order_cap = kDefaultOrderCap);

enum class MatrixKind { gl, sl };

/// GL(2,p) or SL(2,p) over the prime field F_p, p <= 13. Elements are
/// 2x2 matrices (a,b,c,d) enumerated with the identity first, then the
/// rest in lexicographic order.
FiniteGroup matrix_group(MatrixKind kind, int dim, int p,
                         int order_cap = kDefaultOrderCap);

/// Direct product on index pairs: (g,h) -> g*|H| + h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::string name = "", int order_cap = kDefaultOrderCap);

enum class Family { cyclic, dihedral, dicyclic, symmetric, alternating, heisenberg };

/// Standard families with documented element indexing:
///   cyclic(n)      i -> g^i
///   dihedral(n)    order 2n; i < n -> r^i, n+i -> s*r^i  (s*r*s = r^-1)
///   dicyclic(n)    order 4n; i < 2n -> a^i, 2n+i -> a^i*b (b^2 = a^n)
///   symmetric(n)   permutations of n letters in lexicographic order, n <= 7
///   alternating(n) even permutations in lexicographic order, n <= 7
///   heisenberg(p)  upper unitriangular 3x3 over F_p, p an odd prime;
///                  (a,b,c) -> index a*p^2 + b*p + c
FiniteGroup standard_family(Family family, int param);

/// Smallest subgroup containing the seed elements.
Subgroup subgroup_closure(const FiniteGroup& g, const std::vector<int>& seed);

/// Closure of a seed set given as element indices, returned as a sorted
/// member list (cheaper form used by search loops).
std::vector<int> closure_members(const FiniteGroup& g, const std::vector<int>& seed);

}  // namespace ncg
